#ifndef SIXVERTEX_IO_HPP
#define SIXVERTEX_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "model.hpp"
#include "numerics.hpp"

namespace sixvertex {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class SpecError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

inline json to_json(const Rational &r) { return r.to_string(); }
inline json to_json(const Complex &c) { return json::array({c.real(), c.imag()}); }

template <Field T>
json to_json(const AlgebraicPoint<T> &p) {
	return json{{"x", to_json(p.x)}, {"u", to_json(p.u)}};
}

template <typename T>
json to_json(const std::vector<T> &v) {
	json out = json::array();
	for (const auto &x : v)
		out.push_back(to_json(x));
	return out;
}

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json &j) {
	if (j.is_string())
		return Rational::parse(j.get<std::string>());
	if (j.is_number_integer())
		return Rational(j.get<long>());
	throw SpecError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

/// Accepts real numbers and [re, im] pairs.
inline Complex complex_from_json(const json &j) {
	if (j.is_number())
		return {j.get<double>(), 0.0};
	if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
		return {j[0].get<double>(), j[1].get<double>()};
	throw SpecError("expected a real number or [re, im], got " + j.dump());
}

template <Field T>
T scalar_from_json(const json &j) {
	if constexpr (std::is_same_v<T, Rational>)
		return rational_from_json(j);
	else
		return complex_from_json(j);
}

template <Field T>
std::vector<T> scalars_from_json(const json &j, const char *key) {
	if (!j.is_array())
		throw SpecError(std::string("\"") + key + "\" must be an array");
	std::vector<T> out;
	for (const auto &x : j)
		out.push_back(scalar_from_json<T>(x));
	return out;
}

template <WeightModel M>
struct Problem {
	M model;
	SpectralParams<M> params;
};

using RationalProblem = Problem<RationalModel<Rational>>;
using TrigComplexProblem = Problem<TrigComplexModel>;
using AlgebraicRationalProblem = Problem<TrigAlgebraicModel<Rational>>;
using AnyProblem = std::variant<RationalProblem, TrigComplexProblem, AlgebraicRationalProblem>;

inline ModelKind parse_model_kind(const std::string &s) {
	for (auto k : {ModelKind::rational, ModelKind::trig_complex, ModelKind::trig_algebraic})
		if (s == to_string(k))
			return k;
	throw SpecError("unknown model \"" + s + "\"");
}

/**
 * Parses a parameter block
 *   {"model": "rational" | "trig-complex" | "trig-algebraic",
 *    "gamma": real, "q": "p/q", "lambda": [...], "nu": [...], "u": [...], "v": [...]}.
 * The algebraic model takes the square roots u, v (x = u^2, y = v^2).
 */
inline AnyProblem problem_from_json(const json &j) {
	if (!j.is_object() || !j.contains("model"))
		throw SpecError("parameter block needs a \"model\" field");
	auto need = [&](const char *key) -> const json & {
		if (!j.contains(key))
			throw SpecError(std::string("parameter block is missing \"") + key + "\"");
		return j.at(key);
	};
	auto same_length = [](std::size_t a, std::size_t b) {
		if (a == 0 || a != b)
			throw SpecError("spectral parameter lists must be nonempty and of equal length");
	};
	try {
		switch (parse_model_kind(j.at("model").get<std::string>())) {
		case ModelKind::rational: {
			RationalProblem p{{}, {}};
			p.params.lambdas = scalars_from_json<Rational>(need("lambda"), "lambda");
			p.params.nus = scalars_from_json<Rational>(need("nu"), "nu");
			same_length(p.params.lambdas.size(), p.params.nus.size());
			return p;
		}
		case ModelKind::trig_complex: {
			const auto &g = need("gamma");
			if (!g.is_number())
				throw SpecError("\"gamma\" must be a real number");
			TrigComplexProblem p{TrigComplexModel(g.get<double>()), {}};
			p.params.lambdas = scalars_from_json<Complex>(need("lambda"), "lambda");
			p.params.nus = scalars_from_json<Complex>(need("nu"), "nu");
			same_length(p.params.lambdas.size(), p.params.nus.size());
			return p;
		}
		case ModelKind::trig_algebraic: {
			AlgebraicRationalProblem p{TrigAlgebraicModel<Rational>(rational_from_json(need("q"))), {}};
			for (const auto &u : scalars_from_json<Rational>(need("u"), "u"))
				p.params.lambdas.push_back(AlgebraicPoint<Rational>::from_root(u));
			for (const auto &v : scalars_from_json<Rational>(need("v"), "v"))
				p.params.nus.push_back(AlgebraicPoint<Rational>::from_root(v));
			same_length(p.params.lambdas.size(), p.params.nus.size());
			validate(p.model, p.params);
			return p;
		}
		}
	} catch (const nlohmann::json::exception &e) {
		throw SpecError(std::string("malformed parameter block: ") + e.what());
	} catch (const ConsistencyError &e) {
		throw SpecError(e.what());
	} catch (const std::domain_error &e) {
		throw SpecError(e.what());
	}
	throw SpecError("unreachable model kind");
}

inline json model_to_json(const RationalModel<Rational> &) { return json{{"model", "rational"}}; }
inline json model_to_json(const TrigComplexModel &m) { return json{{"model", "trig-complex"}, {"gamma", m.gamma()}}; }
template <Field T>
json model_to_json(const TrigAlgebraicModel<T> &m) {
	return json{{"model", "trig-algebraic"}, {"q", to_json(m.q())}};
}

/// Parameter block for a model and its spectral parameters (inverse of problem_from_json).
template <WeightModel M>
json params_to_json(const M &model, const SpectralParams<M> &params) {
	json j = model_to_json(model);
	if constexpr (M::kind == ModelKind::trig_algebraic) {
		json u = json::array(), v = json::array();
		for (const auto &p : params.lambdas)
			u.push_back(to_json(p.u));
		for (const auto &p : params.nus)
			v.push_back(to_json(p.u));
		j["u"] = u;
		j["v"] = v;
	} else if constexpr (M::kind == ModelKind::trig_complex) {
		json l = json::array(), n = json::array();
		for (const auto &p : params.lambdas)
			l.push_back(p.imag() == 0.0 ? json(p.real()) : to_json(p));
		for (const auto &p : params.nus)
			n.push_back(p.imag() == 0.0 ? json(p.real()) : to_json(p));
		j["lambda"] = l;
		j["nu"] = n;
	} else {
		j["lambda"] = to_json(params.lambdas);
		j["nu"] = to_json(params.nus);
	}
	return j;
}

} // namespace sixvertex

#endif
