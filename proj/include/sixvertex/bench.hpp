#ifndef SIXVERTEX_BENCH_HPP
#define SIXVERTEX_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "verify.hpp"

namespace sixvertex {

struct BenchConfig {
	ModelKind mode = ModelKind::trig_complex;
	std::size_t n_min = 4;
	std::size_t n_max = 12;
	std::size_t reps = 5;
	std::uint64_t seed = 0;
	/// Each repetition loops the call until this much time has passed, then divides.
	double min_sample_ms = 2.0;
	std::size_t enum_cap = 6;
	std::size_t qism_cap = kDefaultQismCap;
	bool timing = true;
};

/// Median over reps of the per-call wall time in milliseconds.
template <typename F>
double median_call_ms(F &&f, std::size_t reps, double min_sample_ms) {
	using clock = std::chrono::steady_clock;
	std::vector<double> samples;
	for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
		std::size_t calls = 0;
		const auto start = clock::now();
		double elapsed = 0.0;
		do {
			f();
			++calls;
			elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
		} while (elapsed < min_sample_ms);
		samples.push_back(elapsed / static_cast<double>(calls));
	}
	std::sort(samples.begin(), samples.end());
	const std::size_t m = samples.size();
	return m % 2 ? samples[m / 2] : 0.5 * (samples[m / 2 - 1] + samples[m / 2]);
}

namespace detail {

/// Ratio of oracle to determinant time per N and whether it grows strictly.
inline json scaling_summary(const json &rows, const std::string &oracle, const std::string &det) {
	json ns = json::array(), ratios = json::array();
	bool monotone = true;
	double last = 0.0;
	for (const auto &row : rows) {
		const json *o = nullptr, *d = nullptr;
		for (const auto &e : row["entries"]) {
			if (e.value("skipped", false))
				continue;
			if (e["representation"] == oracle)
				o = &e;
			if (e["representation"] == det)
				d = &e;
		}
		if (!o || !d)
			continue;
		const double ratio = (*o)["median_ms"].get<double>() / std::max((*d)["median_ms"].get<double>(), 1e-9);
		if (!ratios.empty() && ratio <= last)
			monotone = false;
		last = ratio;
		ns.push_back(row["N"]);
		ratios.push_back(ratio);
	}
	return json{{"N", ns}, {"ratio", ratios}, {"monotone", ratios.size() >= 2 && monotone}};
}

} // namespace detail

/**
 * Wall times of every representation for N in [n_min, n_max] on one random
 * generic draw per N. Each entry records the value and whether it agrees
 * with the ik value. Oracles above their caps are marked skipped.
 */
template <WeightModel M>
json run_bench(const BenchConfig &cfg) {
	Rng model_rng(cfg.seed);
	const M model = Sampler<M>::model(model_rng);
	json rows = json::array();
	bool consistent = true;
	for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
		Rng rng(cfg.seed + n);
		const auto params = draw_params(model, n, rng);
		const auto impls = z_implementations<M>(cfg.seed);
		std::optional<typename M::scalar_type> ik_value;
		for (const auto &z : impls)
			if (z.name == "ik")
				ik_value = z.fn(model, params);
		json entries = json::array();
		for (const auto &z : impls) {
			json e{{"representation", z.name}};
			const std::size_t cap = z.name == "enum" ? cfg.enum_cap : z.name == "qism" ? cfg.qism_cap : 0;
			if (cap && n > cap) {
				e["skipped"] = true;
				e["reason"] = "N exceeds the " + z.name + " cap of " + std::to_string(cap);
				entries.push_back(e);
				continue;
			}
			const auto value = z.fn(model, params);
			e["median_ms"] = cfg.timing ? median_call_ms([&] { (void)z.fn(model, params); }, cfg.reps, cfg.min_sample_ms)
			                            : 0.0;
			e["value"] = to_json(value);
			const bool agrees = detail::values_match(value, *ik_value);
			e["agrees_with_ik"] = agrees;
			consistent = consistent && agrees;
			entries.push_back(e);
		}
		rows.push_back(json{{"N", n}, {"entries", entries}});
	}
	json out{{"mode", to_string(M::kind)}, {"seed", cfg.seed}, {"reps", cfg.reps}, {"model", model_to_json(model)},
	         {"rows", rows}, {"consistent", consistent}};
	if (cfg.timing)
		out["scaling"] = json{{"qism/ik", detail::scaling_summary(rows, "qism", "ik")},
		                      {"enum/ik", detail::scaling_summary(rows, "enum", "ik")}};
	return out;
}

inline json run_bench(const BenchConfig &cfg) {
	switch (cfg.mode) {
	case ModelKind::rational: return run_bench<RationalModel<Rational>>(cfg);
	case ModelKind::trig_algebraic: return run_bench<TrigAlgebraicModel<Rational>>(cfg);
	case ModelKind::trig_complex: return run_bench<TrigComplexModel>(cfg);
	}
	return {};
}

} // namespace sixvertex

#endif
