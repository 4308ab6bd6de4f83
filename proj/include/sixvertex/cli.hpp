#ifndef SIXVERTEX_CLI_HPP
#define SIXVERTEX_CLI_HPP

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "detrep.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "qism.hpp"
#include "verify.hpp"

namespace sixvertex {

enum ExitCode : int { kExitOk = 0, kExitPropertyFailure = 1, kExitSpecError = 2, kExitSingular = 3 };

/// Everything a subcommand needs; filled from the --spec file, then overridden by flags.
struct JobSpec {
	std::string command;
	json params; ///< the parameter block (top level of the spec file)
	std::string representation = "ik";
	json basis; ///< "monomial" (default), "lagrange", "random", {"lagrange": [...]} or {"coeffs": [[...]]}
	std::uint64_t seed = 0;
	std::string out;
	bool parallel = false;
	bool timing = true;
	bool dump_state = false;
	std::size_t n = 0; ///< enumerate
	std::string format = "json";
	VerifyConfig verify;
	BenchConfig bench;
};

namespace detail {

inline std::vector<std::string> split_list(const std::string &s) {
	std::vector<std::string> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty())
			out.push_back(item);
	return out;
}

inline std::size_t size_field(const json &j, const char *key, std::size_t fallback) {
	if (!j.contains(key))
		return fallback;
	if (!j.at(key).is_number_unsigned())
		throw SpecError(std::string("\"") + key + "\" must be a nonnegative integer");
	return j.at(key).get<std::size_t>();
}

inline void apply_check_names(VerifyConfig &v, const std::vector<std::string> &names) {
	for (const auto &c : names) {
		const auto &a = property_check_ids();
		const auto &b = qism_lemma_ids();
		if (std::find(a.begin(), a.end(), c) == a.end() && std::find(b.begin(), b.end(), c) == b.end())
			throw SpecError("unknown check \"" + c + "\"");
		v.checks.insert(c);
	}
}

inline void apply_model_names(VerifyConfig &v, const std::vector<std::string> &names) {
	for (const auto &m : names)
		v.models.insert(parse_model_kind(m));
}

} // namespace detail

/// Reads the JSON job spec. Unknown keys are ignored so a file can serve several subcommands.
inline JobSpec job_spec_from_json(const json &j) {
	if (!j.is_object())
		throw SpecError("job spec must be a JSON object");
	JobSpec s;
	try {
		s.params = j;
		if (j.contains("subcommand"))
			s.command = j.at("subcommand").get<std::string>();
		if (j.contains("representation"))
			s.representation = j.at("representation").get<std::string>();
		if (j.contains("basis"))
			s.basis = j.at("basis");
		if (j.contains("seed"))
			s.seed = j.at("seed").get<std::uint64_t>();
		if (j.contains("out"))
			s.out = j.at("out").get<std::string>();
		if (j.contains("parallel"))
			s.parallel = j.at("parallel").get<bool>();
		s.n = detail::size_field(j, "n", 0);
		if (j.contains("verify")) {
			const auto &v = j.at("verify");
			s.verify.n_min = detail::size_field(v, "n_min", s.verify.n_min);
			s.verify.n_max = detail::size_field(v, "n_max", s.verify.n_max);
			s.verify.complex_n_max = detail::size_field(v, "complex_n_max", s.verify.complex_n_max);
			s.verify.uniqueness_n_max = detail::size_field(v, "uniqueness_n_max", s.verify.uniqueness_n_max);
			s.verify.lemma_n_max = detail::size_field(v, "lemma_n_max", s.verify.lemma_n_max);
			s.verify.flip_n_max = detail::size_field(v, "flip_n_max", s.verify.flip_n_max);
			s.verify.seeds = detail::size_field(v, "seeds", s.verify.seeds);
			if (v.contains("checks"))
				detail::apply_check_names(s.verify, v.at("checks").get<std::vector<std::string>>());
			if (v.contains("models"))
				detail::apply_model_names(s.verify, v.at("models").get<std::vector<std::string>>());
			if (v.contains("inject_fault"))
				s.verify.inject_fault = v.at("inject_fault").get<bool>();
		}
		if (j.contains("bench")) {
			const auto &b = j.at("bench");
			if (b.contains("mode"))
				s.bench.mode = parse_model_kind(b.at("mode").get<std::string>());
			s.bench.n_min = detail::size_field(b, "n_min", s.bench.n_min);
			s.bench.n_max = detail::size_field(b, "n_max", s.bench.n_max);
			s.bench.reps = detail::size_field(b, "reps", s.bench.reps);
		}
	} catch (const nlohmann::json::exception &e) {
		throw SpecError(std::string("malformed job spec: ") + e.what());
	}
	return s;
}

inline JobSpec job_spec_from_file(const std::string &path) {
	std::ifstream in(path);
	if (!in)
		throw SpecError("cannot open spec file \"" + path + "\"");
	try {
		return job_spec_from_json(json::parse(in));
	} catch (const nlohmann::json::parse_error &e) {
		throw SpecError("spec file \"" + path + "\" is not valid JSON: " + e.what());
	}
}

/// Polynomial basis of size n described by a JSON basis spec.
template <Field T>
PolyBasis<T> basis_from_json(const json &spec, std::size_t n, std::uint64_t seed) {
	try {
		if (spec.is_null() || spec == "monomial")
			return monomial_basis<T>(n);
		if (spec == "lagrange")
			return lagrange_basis(detail::lagrange_nodes<T>(n));
		if (spec == "random")
			return random_basis<T>(n, seed);
		if (spec.is_object() && spec.contains("lagrange")) {
			auto pts = scalars_from_json<T>(spec.at("lagrange"), "lagrange");
			if (pts.size() != n)
				throw SpecError("Lagrange basis needs exactly N points");
			return lagrange_basis(pts);
		}
		if (spec.is_object() && spec.contains("coeffs")) {
			const auto &rows = spec.at("coeffs");
			if (!rows.is_array() || rows.size() != n)
				throw SpecError("basis coefficients must be an N x N array");
			SquareMatrix<T> c(n);
			for (std::size_t i = 0; i < n; ++i) {
				auto row = scalars_from_json<T>(rows[i], "coeffs");
				if (row.size() != n)
					throw SpecError("basis coefficients must be an N x N array");
				for (std::size_t k = 0; k < n; ++k)
					c(i, k) = row[k];
			}
			return PolyBasis<T>(std::move(c));
		}
	} catch (const SpecError &) {
		throw;
	} catch (const std::invalid_argument &e) {
		throw SpecError(std::string("invalid basis: ") + e.what());
	}
	throw SpecError("unknown basis spec " + spec.dump());
}

namespace detail {

/// Checks the representation against the model before anything is computed.
inline void check_representation(const std::string &rep, ModelKind kind) {
	if (rep == "enum" || rep == "qism")
		return;
	auto r = parse_representation(rep);
	if (!r)
		throw SpecError("unknown representation \"" + rep + "\"");
	if (!supports(kind, *r))
		throw SpecError("representation \"" + rep + "\" is not available for the " + to_string(kind) + " model");
}

template <WeightModel M>
typename M::scalar_type compute_value(const Problem<M> &p, const JobSpec &spec, std::ostream &err) {
	using T = typename M::scalar_type;
	const auto &model = p.model;
	const auto &params = p.params;
	const std::string &rep = spec.representation;
	if (rep == "enum")
		return z_enum(model, params, EnumOptions{spec.parallel});
	if (rep == "qism") {
		if (spec.dump_state) {
			auto state = QuantumState<T>::all_up(params.size());
			for (const auto &lam : params.lambdas)
				state = apply_b(model, params, lam, state);
			state.dump(err);
		}
		return z_qism(model, params);
	}
	const Representation r = *parse_representation(rep);
	auto basis = [&] { return basis_from_json<T>(spec.basis, params.size(), spec.seed); };
	switch (r) {
	case Representation::ik: return z_ik(model, params);
	case Representation::kostov:
		if constexpr (M::kind == ModelKind::rational)
			return z_kostov(model, params);
		break;
	case Representation::fw1:
	case Representation::fw2:
		if constexpr (M::kind == ModelKind::trig_complex)
			return z_fw(r == Representation::fw1 ? TrigVariant::first : TrigVariant::second, model, params);
		break;
	case Representation::basis_rat:
		if constexpr (M::kind == ModelKind::rational)
			return z_basis_rat(model, params, basis());
		break;
	case Representation::basis_trig1:
	case Representation::basis_trig2: {
		const auto v = r == Representation::basis_trig1 ? TrigVariant::first : TrigVariant::second;
		if constexpr (M::kind == ModelKind::trig_algebraic)
			return z_basis_trig(v, model, params, basis());
		if constexpr (M::kind == ModelKind::trig_complex)
			return partition_from_reduced(z_basis_trig(v, model, params, basis()), model, params);
		break;
	}
	}
	throw SpecError("representation \"" + rep + "\" is not available for this model");
}

template <WeightModel M>
json run_compute(const Problem<M> &p, const JobSpec &spec, std::ostream &err) {
	check_representation(spec.representation, M::kind);
	if (spec.representation.rfind("basis", 0) == 0)
		(void)basis_from_json<typename M::scalar_type>(spec.basis, p.params.size(), spec.seed);
	const auto start = std::chrono::steady_clock::now();
	const auto value = compute_value(p, spec, err);
	const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return json{{"N", p.params.size()},
	            {"representation", spec.representation},
	            {"value", to_json(value)},
	            {"elapsed_ms", spec.timing ? ms : 0.0}};
}

class Output {
public:
	Output(const std::string &path, std::ostream &fallback) : os_(&fallback) {
		if (!path.empty()) {
			file_.open(path);
			if (!file_)
				throw SpecError("cannot write output file \"" + path + "\"");
			os_ = &file_;
		}
	}
	std::ostream &stream() { return *os_; }

private:
	std::ofstream file_;
	std::ostream *os_;
};

} // namespace detail

inline int run_compute(const JobSpec &spec, std::ostream &out, std::ostream &err) {
	const AnyProblem problem = problem_from_json(spec.params);
	const json result = std::visit([&](const auto &p) { return detail::run_compute(p, spec, err); }, problem);
	detail::Output o(spec.out, out);
	o.stream() << result.dump() << '\n';
	return kExitOk;
}

inline int run_verify(const JobSpec &spec, std::ostream &out, std::ostream &err) {
	VerifyConfig cfg = spec.verify;
	cfg.seed = spec.seed;
	detail::Output o(spec.out, out);
	std::size_t total = 0, failed = 0;
	run_all_properties(cfg, [&](const PropertyReport &r) {
		++total;
		if (!r.pass)
			++failed;
		o.stream() << r.to_json().dump() << '\n';
	});
	err << total << " checks, " << failed << " failed\n";
	if (total == 0) {
		err << "no checks matched the requested filters\n";
		return kExitSpecError;
	}
	return failed ? kExitPropertyFailure : kExitOk;
}

inline int run_enumerate(const JobSpec &spec, std::ostream &out, std::ostream &) {
	if (spec.n == 0)
		throw SpecError("enumerate needs a lattice size N >= 1 (\"n\" or --n)");
	if (spec.format != "json" && spec.format != "grid")
		throw SpecError("unknown enumerate format \"" + spec.format + "\"");
	detail::Output o(spec.out, out);
	if (spec.format == "grid") {
		bool first = true;
		for_each_config(spec.n, [&](const LatticeConfig &c) {
			if (!first)
				o.stream() << '\n';
			first = false;
			c.dump(o.stream());
		});
		return kExitOk;
	}
	json configs = json::array();
	for_each_config(spec.n, [&](const LatticeConfig &c) {
		std::stringstream ss;
		c.dump(ss);
		json rows = json::array();
		std::string line;
		while (std::getline(ss, line))
			rows.push_back(line);
		configs.push_back(rows);
	});
	o.stream() << json{{"N", spec.n}, {"count", configs.size()}, {"configs", configs}}.dump() << '\n';
	return kExitOk;
}

inline int run_bench(const JobSpec &spec, std::ostream &out, std::ostream &err) {
	BenchConfig cfg = spec.bench;
	cfg.seed = spec.seed;
	cfg.timing = spec.timing;
	if (cfg.n_min == 0 || cfg.n_min > cfg.n_max)
		throw SpecError("bench needs 1 <= n_min <= n_max");
	const json table = run_bench(cfg);
	detail::Output o(spec.out, out);
	o.stream() << table.dump(2) << '\n';
	if (!table.at("consistent").get<bool>()) {
		err << "representations disagree; see agrees_with_ik\n";
		return kExitPropertyFailure;
	}
	return kExitOk;
}

/**
 * Entry point shared by the executable and the tests. args excludes the
 * program name. Returns the process exit code.
 */
inline int run_cli(const std::vector<std::string> &args, std::ostream &out = std::cout,
                   std::ostream &err = std::cerr) {
	CLI::App app{"Six-vertex model partition functions with domain wall boundaries"};
	app.require_subcommand(1);

	std::string spec_path, out_path, representation, basis, checks, models, format, mode;
	std::uint64_t seed = 0;
	std::size_t n = 0, n_min = 0, n_max = 0, seeds = 0, reps = 0;
	bool parallel = false, no_timing = false, dump_state = false, inject_fault = false;

	auto common = [&](CLI::App *sub) {
		sub->add_option("--spec", spec_path, "JSON job spec")->check(CLI::ExistingFile);
		sub->add_option("--seed", seed, "seed for every random draw");
		sub->add_option("--out", out_path, "write the result here instead of stdout");
		sub->add_flag("--parallel", parallel, "split the enumeration across threads");
	};
	auto *compute = app.add_subcommand("compute", "evaluate Z_N for one parameter set");
	common(compute);
	compute->add_option("--representation,-r", representation,
	                    "ik, kostov, fw1, fw2, basis-rat, basis-trig1, basis-trig2, enum or qism");
	compute->add_option("--basis", basis, "monomial, lagrange or random");
	compute->add_flag("--no-timing", no_timing, "report elapsed_ms as 0 for reproducible output");
	compute->add_flag("--dump-state", dump_state, "with qism: print the final B-chain state to stderr");

	auto *verify = app.add_subcommand("verify", "run the property matrix");
	common(verify);
	verify->add_option("--checks", checks, "comma-separated subset of checks");
	verify->add_option("--models", models, "comma-separated subset of models");
	verify->add_option("--n-max", n_max, "largest N for the exact models");
	verify->add_option("--seeds", seeds, "number of seeds per check");
	verify->add_flag("--inject-fault", inject_fault, "flip the sign of c in the enumeration oracle");

	auto *enumerate = app.add_subcommand("enumerate", "list all configurations of the N x N lattice");
	common(enumerate);
	enumerate->add_option("--n", n, "lattice size");
	enumerate->add_option("--format", format, "json or grid")->check(CLI::IsMember({"json", "grid"}));

	auto *bench = app.add_subcommand("bench", "time every representation over a range of N");
	common(bench);
	bench->add_option("--mode", mode, "rational, trig-complex or trig-algebraic");
	bench->add_option("--n-min", n_min, "smallest N");
	bench->add_option("--n-max", n_max, "largest N");
	bench->add_option("--reps", reps, "repetitions per timing (median reported)");
	bench->add_flag("--no-timing", no_timing, "skip timings for reproducible output");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitSpecError;
	}

	CLI::App *sub = app.get_subcommands().front();
	try {
		JobSpec spec = spec_path.empty() ? JobSpec{} : job_spec_from_file(spec_path);
		if (!spec.command.empty() && spec.command != sub->get_name())
			throw SpecError("spec is for \"" + spec.command + "\" but \"" + sub->get_name() + "\" was requested");
		spec.command = sub->get_name();
		if (sub->count("--seed"))
			spec.seed = seed;
		if (sub->count("--out"))
			spec.out = out_path;
		if (parallel)
			spec.parallel = true;
		if (no_timing)
			spec.timing = false;

		if (sub == compute) {
			if (compute->count("--representation"))
				spec.representation = representation;
			if (compute->count("--basis"))
				spec.basis = basis;
			spec.dump_state = dump_state;
			if (spec_path.empty())
				throw SpecError("compute needs --spec with a parameter block");
			return run_compute(spec, out, err);
		}
		if (sub == verify) {
			if (verify->count("--checks")) {
				spec.verify.checks.clear();
				detail::apply_check_names(spec.verify, detail::split_list(checks));
			}
			if (verify->count("--models")) {
				spec.verify.models.clear();
				detail::apply_model_names(spec.verify, detail::split_list(models));
			}
			if (verify->count("--n-max"))
				spec.verify.n_max = n_max;
			if (verify->count("--seeds"))
				spec.verify.seeds = seeds;
			if (inject_fault)
				spec.verify.inject_fault = true;
			return run_verify(spec, out, err);
		}
		if (sub == enumerate) {
			if (enumerate->count("--n"))
				spec.n = n;
			if (enumerate->count("--format"))
				spec.format = format;
			return run_enumerate(spec, out, err);
		}
		if (bench->count("--mode"))
			spec.bench.mode = parse_model_kind(mode);
		if (bench->count("--n-min"))
			spec.bench.n_min = n_min;
		if (bench->count("--n-max"))
			spec.bench.n_max = n_max;
		if (bench->count("--reps"))
			spec.bench.reps = reps;
		return run_bench(spec, out, err);
	} catch (const SingularConfiguration &e) {
		err << "error: " << e.what() << '\n';
		return kExitSingular;
	} catch (const std::invalid_argument &e) { // SpecError, ConsistencyError
		err << "error: " << e.what() << '\n';
		return kExitSpecError;
	} catch (const ResourceLimit &e) {
		err << "error: " << e.what() << '\n';
		return kExitSpecError;
	} catch (const std::domain_error &e) {
		err << "error: " << e.what() << '\n';
		return kExitSingular;
	}
}

} // namespace sixvertex

#endif
