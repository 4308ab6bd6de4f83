#ifndef SIXVERTEX_VERIFY_HPP
#define SIXVERTEX_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "detrep.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "model.hpp"
#include "numerics.hpp"
#include "polybasis.hpp"
#include "qism.hpp"

namespace sixvertex {

/// Outcome of one property check. A failure carries the inputs and both sides.
struct PropertyReport {
	std::string id;
	std::string model;
	std::size_t n = 0;
	std::uint64_t seed = 0;
	bool pass = true;
	json witness;

	json to_json() const {
		return json{{"id", id}, {"model", model}, {"n", n}, {"seed", seed}, {"pass", pass}, {"witness", witness}};
	}
};

using Rng = std::mt19937_64;

/// Random rational with numerator in [-20, 20] and denominator in [1, 5].
inline Rational draw_rational(Rng &rng) {
	std::uniform_int_distribution<long> num(-20, 20), den(1, 5);
	long p = num(rng);
	return Rational(p, den(rng));
}

inline Rational draw_nonzero_rational(Rng &rng) {
	for (;;) {
		Rational r = draw_rational(rng);
		if (!r.is_zero())
			return r;
	}
}

/// Per-model random draws of models, points and amplitudes.
template <WeightModel M>
struct Sampler;

template <>
struct Sampler<RationalModel<Rational>> {
	using M = RationalModel<Rational>;
	static M model(Rng &) { return {}; }
	static Rational point(const M &, Rng &rng) { return draw_rational(rng); }
	static Rational scalar(Rng &rng) { return draw_rational(rng); }
};

template <>
struct Sampler<TrigAlgebraicModel<Rational>> {
	using M = TrigAlgebraicModel<Rational>;
	static M model(Rng &rng) {
		for (;;) {
			Rational q = draw_rational(rng);
			if (!q.is_zero() && q != Rational(1) && q != Rational(-1))
				return M(q);
		}
	}
	static AlgebraicPoint<Rational> point(const M &, Rng &rng) {
		return AlgebraicPoint<Rational>::from_root(draw_nonzero_rational(rng));
	}
	static Rational scalar(Rng &rng) { return draw_rational(rng); }
};

template <>
struct Sampler<TrigComplexModel> {
	using M = TrigComplexModel;
	static M model(Rng &rng) { return M(std::uniform_real_distribution<double>(0.1, 1.4)(rng)); }
	static Complex point(const M &, Rng &rng) { return {std::uniform_real_distribution<double>(-2.0, 2.0)(rng), 0.0}; }
	static Complex scalar(Rng &rng) {
		std::uniform_real_distribution<double> d(-1.0, 1.0);
		double re = d(rng);
		return {re, d(rng)};
	}
};

/// Smallest magnitude a complex quantity may have and still count as nonzero in a draw.
inline constexpr double kGenericMargin = 1e-3;

template <Field T>
bool generic_nonzero(const T &v) {
	if constexpr (scalar_traits<T>::exact)
		return !is_zero(v);
	else
		return magnitude(v) >= kGenericMargin;
}

template <WeightModel M>
bool distinct_points(const M &model, const std::vector<typename M::point_type> &zs) {
	for (std::size_t j = 0; j < zs.size(); ++j)
		for (std::size_t k = j + 1; k < zs.size(); ++k)
			if (!generic_nonzero(model.vandermonde_factor(zs[j], zs[k])))
				return false;
	return true;
}

/// Distinct lambdas, distinct nus, and nonvanishing a and b weights at every vertex.
template <WeightModel M>
bool is_generic(const M &model, const SpectralParams<M> &params) {
	if (!distinct_points(model, params.lambdas) || !distinct_points(model, params.nus))
		return false;
	for (const auto &l : params.lambdas)
		for (const auto &nu : params.nus) {
			auto w = model.weights(l, nu);
			if (!generic_nonzero(w.a) || !generic_nonzero(w.b))
				return false;
		}
	return true;
}

/// Additionally a(nu_j, nu_k) != 0 for all j, k, so that lambda = nu is a valid point.
template <WeightModel M>
bool rows_generic(const M &model, const std::vector<typename M::point_type> &nus) {
	for (const auto &a : nus)
		for (const auto &b : nus)
			if (!generic_nonzero(model.weights(a, b).a))
				return false;
	return distinct_points(model, nus);
}

template <WeightModel M>
SpectralParams<M> draw_params(const M &model, std::size_t n, Rng &rng, bool rows_too = false) {
	for (;;) {
		SpectralParams<M> p;
		for (std::size_t j = 0; j < n; ++j)
			p.lambdas.push_back(Sampler<M>::point(model, rng));
		for (std::size_t j = 0; j < n; ++j)
			p.nus.push_back(Sampler<M>::point(model, rng));
		if (is_generic(model, p) && (!rows_too || rows_generic(model, p.nus)))
			return p;
	}
}

/// A Z-computing function together with the special points it is valid at.
template <WeightModel M>
struct ZImpl {
	using function_type = std::function<typename M::scalar_type(const M &, const SpectralParams<M> &)>;
	std::string name;
	function_type fn;
	bool at_vanishing = true;      ///< valid at lambda_1 = nu_j, lambda_2 = nu_j - 1
	bool at_specialization = true; ///< valid at lambda = nu
};

/// The model with the sign of c flipped; used to self-test the harness.
template <WeightModel M>
class SignFlippedC : public M {
public:
	explicit SignFlippedC(const M &m) : M(m) {}
	VertexWeights<typename M::scalar_type> weights(const typename M::point_type &l,
	                                               const typename M::point_type &nu) const {
		auto w = M::weights(l, nu);
		w.c = -w.c;
		return w;
	}
};

template <WeightModel M>
typename M::scalar_type z_enum_faulty(const M &model, const SpectralParams<M> &params) {
	SignFlippedC<M> faulty(model);
	SpectralParams<SignFlippedC<M>> p{params.lambdas, params.nus};
	return z_enum(faulty, p);
}

namespace detail {

template <Field T>
std::vector<T> lagrange_nodes(std::size_t n) {
	std::vector<T> nodes;
	for (std::size_t k = 0; k < n; ++k)
		nodes.push_back(T(static_cast<long>(k + 1)));
	return nodes;
}

/// enum and qism first; the faulty enumeration replaces the honest one when requested.
template <WeightModel M>
std::vector<ZImpl<M>> oracle_impls(bool inject_fault) {
	std::vector<ZImpl<M>> out;
	if (inject_fault)
		out.push_back({"enum", [](const M &m, const SpectralParams<M> &p) { return z_enum_faulty(m, p); }});
	else
		out.push_back({"enum", [](const M &m, const SpectralParams<M> &p) { return z_enum(m, p); }});
	out.push_back({"qism", [](const M &m, const SpectralParams<M> &p) { return z_qism(m, p); }});
	return out;
}

} // namespace detail

/// Every Z-implementation applicable to the model, oracles first.
template <WeightModel M>
std::vector<ZImpl<M>> z_implementations(std::uint64_t basis_seed, bool inject_fault = false) {
	using T = typename M::scalar_type;
	using P = SpectralParams<M>;
	auto out = detail::oracle_impls<M>(inject_fault);
	if constexpr (M::kind == ModelKind::rational) {
		out.push_back({"ik", [](const M &m, const P &p) { return z_ik(m, p); }, false, false});
		out.push_back({"kostov", [](const M &m, const P &p) { return z_kostov(m, p); }, false, true});
		out.push_back({"basis-rat/monomial",
		               [](const M &m, const P &p) { return z_basis_rat(m, p, monomial_basis<T>(p.size())); }});
		out.push_back({"basis-rat/lagrange", [](const M &m, const P &p) {
			               return z_basis_rat(m, p, lagrange_basis(detail::lagrange_nodes<T>(p.size())));
		               }});
		out.push_back({"basis-rat/random", [basis_seed](const M &m, const P &p) {
			               return z_basis_rat(m, p, random_basis<T>(p.size(), basis_seed));
		               }});
	} else if constexpr (M::kind == ModelKind::trig_algebraic) {
		out.push_back({"ik", [](const M &m, const P &p) { return z_ik(m, p); }, false, false});
		for (auto v : {TrigVariant::first, TrigVariant::second}) {
			const std::string tag = v == TrigVariant::first ? "basis-trig1" : "basis-trig2";
			out.push_back({tag + "/monomial", [v](const M &m, const P &p) {
				               return z_basis_trig(v, m, p, monomial_basis<T>(p.size()));
			               }});
			out.push_back({tag + "/lagrange", [v](const M &m, const P &p) {
				               return z_basis_trig(v, m, p, lagrange_basis(detail::lagrange_nodes<T>(p.size())));
			               }});
			out.push_back({tag + "/random", [v, basis_seed](const M &m, const P &p) {
				               return z_basis_trig(v, m, p, random_basis<T>(p.size(), basis_seed));
			               }});
		}
	} else {
		out.push_back({"ik", [](const M &m, const P &p) { return z_ik(m, p); }, false, false});
		out.push_back({"fw1", [](const M &m, const P &p) { return z_fw(TrigVariant::first, m, p); }, false, true});
		out.push_back({"fw2", [](const M &m, const P &p) { return z_fw(TrigVariant::second, m, p); }, false, true});
		for (auto v : {TrigVariant::first, TrigVariant::second}) {
			const std::string tag = v == TrigVariant::first ? "basis-trig1" : "basis-trig2";
			out.push_back({tag + "/monomial", [v](const M &m, const P &p) {
				               return partition_from_reduced(z_basis_trig(v, m, p, monomial_basis<T>(p.size())), m, p);
			               }});
		}
	}
	return out;
}

namespace detail {

template <WeightModel M>
PropertyReport make_report(std::string id, const M &, std::size_t n, std::uint64_t seed) {
	PropertyReport r;
	r.id = std::move(id);
	r.model = to_string(M::kind);
	r.n = n;
	r.seed = seed;
	return r;
}

template <Field T>
bool values_match(const T &a, const T &b, double scale = 0.0) {
	if constexpr (scalar_traits<T>::exact)
		return a == b;
	else
		return magnitude(a - b) <= kComplexTolerance * std::max({magnitude(a), magnitude(b), scale});
}

template <Field T>
bool is_vanishing(const T &v, double scale) {
	if constexpr (scalar_traits<T>::exact)
		return is_zero(v);
	else
		return magnitude(v) <= kComplexTolerance * std::max(1.0, scale);
}

/// Runs body and converts an unexpected exception into a failed report.
template <typename Body>
void guarded(PropertyReport &r, Body &&body) {
	try {
		body();
	} catch (const std::exception &e) {
		r.pass = false;
		if (r.witness.is_null())
			r.witness = json::object();
		r.witness["exception"] = e.what();
	}
}

} // namespace detail

/// Z is unchanged under 5 random permutations of the lambdas.
template <WeightModel M>
PropertyReport check_symmetry(const ZImpl<M> &z, const M &model, std::size_t n, std::uint64_t seed) {
	auto r = detail::make_report("symmetry/" + z.name, model, n, seed);
	if (n < 2)
		return r;
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng);
		const auto base = z.fn(model, params);
		std::vector<std::size_t> perm(n);
		for (int t = 0; t < 5; ++t) {
			std::iota(perm.begin(), perm.end(), std::size_t(0));
			std::shuffle(perm.begin(), perm.end(), rng);
			auto permuted = params;
			for (std::size_t j = 0; j < n; ++j)
				permuted.lambdas[j] = params.lambdas[perm[j]];
			const auto value = z.fn(model, permuted);
			if (!detail::values_match(base, value)) {
				r.pass = false;
				r.witness = {{"params", params_to_json(model, params)},
				             {"permutation", perm},
				             {"lhs", to_json(base)},
				             {"rhs", to_json(value)}};
				return;
			}
		}
	});
	return r;
}

/**
 * Degree N - 1 in the first variable (lambda_1, or x_1 in the algebraic model).
 *
 * Interpolates through N + 1 random nodes: the degree-N divided difference
 * must vanish, the degree-(N - 1) one must not, and the interpolant through
 * N nodes must reproduce the value at a fresh point.
 */
template <WeightModel M>
	requires scalar_traits<typename M::scalar_type>::exact
PropertyReport check_degree(const ZImpl<M> &z, const M &model, std::size_t n, std::uint64_t seed) {
	using T = typename M::scalar_type;
	auto r = detail::make_report("degree/" + z.name, model, n, seed);
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng);
		std::vector<typename M::point_type> nodes;
		std::vector<T> zs, values;
		while (nodes.size() < n + 2) {
			auto p = Sampler<M>::point(model, rng);
			auto trial = params;
			trial.lambdas[0] = p;
			if (!is_generic(model, trial))
				continue;
			const T zc = model.coordinate(p);
			if (std::find(zs.begin(), zs.end(), zc) != zs.end())
				continue;
			nodes.push_back(p);
			zs.push_back(zc);
			values.push_back(z.fn(model, trial));
		}
		// Newton divided differences over the first N + 1 nodes.
		std::vector<T> dd(values.begin(), values.begin() + static_cast<long>(n + 1));
		std::vector<T> coef{dd[0]};
		for (std::size_t level = 1; level <= n; ++level) {
			for (std::size_t i = n; i >= level; --i)
				dd[i] = (dd[i] - dd[i - 1]) / (zs[i] - zs[i - level]);
			coef.push_back(dd[level]);
		}
		const T &top = coef[n];
		const T &lead = coef[n - 1];
		T fresh = coef[n - 1];
		for (std::size_t m = n - 1; m-- > 0;)
			fresh = fresh * (zs[n + 1] - zs[m]) + coef[m];
		if (!is_zero(top) || is_zero(lead) || fresh != values[n + 1]) {
			r.pass = false;
			r.witness = {{"params", params_to_json(model, params)},
			             {"nodes", to_json(zs)},
			             {"values", to_json(values)},
			             {"degree_n_coefficient", to_json(top)},
			             {"degree_n_minus_1_coefficient", to_json(lead)},
			             {"lhs", to_json(fresh)},
			             {"rhs", to_json(values[n + 1])}};
		}
	});
	return r;
}

/// Z vanishes at lambda_1 = nu_j, lambda_2 = nu_j - 1 for every j.
template <WeightModel M>
PropertyReport check_vanishing(const ZImpl<M> &z, const M &model, std::size_t n, std::uint64_t seed) {
	auto r = detail::make_report("vanishing/" + z.name, model, n, seed);
	if (n < 2)
		return r;
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng);
		const double scale = magnitude(z.fn(model, params));
		for (std::size_t j = 0; j < n; ++j) {
			auto special = params;
			for (;;) {
				special.lambdas[0] = params.nus[j];
				special.lambdas[1] = model.shift_down(params.nus[j]);
				if (distinct_points(model, special.lambdas))
					break;
				for (std::size_t k = 2; k < n; ++k)
					special.lambdas[k] = Sampler<M>::point(model, rng);
			}
			const auto value = z.fn(model, special);
			if (!detail::is_vanishing(value, scale)) {
				r.pass = false;
				r.witness = {{"params", params_to_json(model, special)},
				             {"j", j},
				             {"lhs", to_json(value)},
				             {"rhs", to_json(typename M::scalar_type(0))}};
				return;
			}
		}
	});
	return r;
}

/// Closed product for Z at lambda = nu (the reduced function in the algebraic model).
template <Field T>
T specialization_value(const RationalModel<T> &, const std::vector<T> &nus) {
	T p(1);
	for (const auto &a : nus)
		for (const auto &b : nus)
			p *= a - b + T(1);
	return p;
}

inline Complex specialization_value(const TrigComplexModel &model, const std::vector<Complex> &nus) {
	Complex p(1.0, 0.0);
	for (const auto &a : nus)
		for (const auto &b : nus)
			p *= std::sin(model.gamma() * (a - b + 1.0));
	return p;
}

template <Field T>
T specialization_value(const TrigAlgebraicModel<T> &model, const std::vector<AlgebraicPoint<T>> &nus) {
	const T &q = model.q();
	T p = scalar_pow(q - T(1) / q, static_cast<long>(nus.size()));
	for (std::size_t j = 0; j < nus.size(); ++j)
		for (std::size_t k = 0; k < nus.size(); ++k)
			if (j != k)
				p *= q * nus[j].x - nus[k].x / q;
	return p;
}

/// Z at lambda = nu equals the closed product.
template <WeightModel M>
PropertyReport check_specialization(const ZImpl<M> &z, const M &model, std::size_t n, std::uint64_t seed = 0) {
	auto r = detail::make_report("specialization/" + z.name, model, n, seed);
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng, true);
		params.lambdas = params.nus;
		const auto value = z.fn(model, params);
		const auto expected = specialization_value(model, params.nus);
		if (!detail::values_match(value, expected, 1.0)) {
			r.pass = false;
			r.witness = {{"params", params_to_json(model, params)}, {"lhs", to_json(value)}, {"rhs", to_json(expected)}};
		}
	});
	return r;
}

namespace detail {

template <Field T>
T uniqueness_base(const RationalModel<T> &) {
	return T(1);
}

template <Field T>
T uniqueness_base(const TrigAlgebraicModel<T> &m) {
	return m.q_minus_q_inv();
}

/// Factor multiplying Z_{N-1} when lambda_1 sits at nu_i.
template <Field T>
T uniqueness_corner(const RationalModel<T> &, const std::vector<T> &lambdas, const std::vector<T> &nus, std::size_t i) {
	T f(1);
	for (std::size_t k = 1; k < lambdas.size(); ++k)
		f *= lambdas[k] - nus[i] + T(1);
	for (std::size_t j = 0; j < nus.size(); ++j)
		f *= nus[i] - nus[j] + T(1);
	return f;
}

template <Field T>
T uniqueness_corner(const TrigAlgebraicModel<T> &m, const std::vector<AlgebraicPoint<T>> &lambdas,
                    const std::vector<AlgebraicPoint<T>> &nus, std::size_t i) {
	const T &q = m.q();
	const T &qi = m.q_inv();
	T f = q - qi;
	for (std::size_t k = 1; k < lambdas.size(); ++k)
		f *= q * lambdas[k].x - qi * nus[i].x;
	for (std::size_t j = 0; j < nus.size(); ++j)
		if (j != i)
			f *= q * nus[i].x - qi * nus[j].x;
	return f;
}

} // namespace detail

/**
 * Z rebuilt from its defining properties alone: Lagrange expansion in the
 * first variable at the nodes nu_i, where the vanishing property factors Z
 * into a known product times Z_{N-1} with lambda_1 and nu_i removed.
 */
template <WeightModel M>
	requires(M::kind != ModelKind::trig_complex)
typename M::scalar_type reconstruct_from_properties(const M &model, const std::vector<typename M::point_type> &lambdas,
                                                    const std::vector<typename M::point_type> &nus) {
	using T = typename M::scalar_type;
	const std::size_t n = lambdas.size();
	if (n == 1)
		return detail::uniqueness_base(model);
	const std::vector<typename M::point_type> rest(lambdas.begin() + 1, lambdas.end());
	const T z1 = model.coordinate(lambdas[0]);
	T sum(0);
	for (std::size_t i = 0; i < n; ++i) {
		std::vector<typename M::point_type> smaller;
		for (std::size_t j = 0; j < n; ++j)
			if (j != i)
				smaller.push_back(nus[j]);
		T basis(1);
		const T zi = model.coordinate(nus[i]);
		for (std::size_t j = 0; j < n; ++j)
			if (j != i) {
				const T zj = model.coordinate(nus[j]);
				basis *= (z1 - zj) / (zi - zj);
			}
		sum += basis * detail::uniqueness_corner(model, lambdas, nus, i) * reconstruct_from_properties(model, rest, smaller);
	}
	return sum;
}

/// The reconstruction agrees exactly with the enumeration oracle at 5 random points.
template <WeightModel M>
	requires(M::kind != ModelKind::trig_complex)
PropertyReport check_uniqueness(const M &model, std::size_t n, std::uint64_t seed, bool inject_fault = false) {
	auto r = detail::make_report("uniqueness", model, n, seed);
	detail::guarded(r, [&] {
		Rng rng(seed);
		const auto nus = draw_params(model, n, rng).nus;
		for (int t = 0; t < 5; ++t) {
			SpectralParams<M> params;
			do {
				params = draw_params(model, n, rng);
				params.nus = nus;
			} while (!is_generic(model, params));
			const auto rebuilt = reconstruct_from_properties(model, params.lambdas, params.nus);
			const auto oracle = inject_fault ? z_enum_faulty(model, params) : z_enum(model, params);
			if (rebuilt != oracle) {
				r.pass = false;
				r.witness = {{"params", params_to_json(model, params)}, {"lhs", to_json(rebuilt)}, {"rhs", to_json(oracle)}};
				return;
			}
		}
	});
	return r;
}

/// All implementations agree at one generic draw.
template <WeightModel M>
PropertyReport check_agreement(const std::vector<ZImpl<M>> &impls, const M &model, std::size_t n,
                               std::uint64_t seed) {
	auto r = detail::make_report("cross-representation", model, n, seed);
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng);
		json values = json::object();
		bool ok = true;
		const auto ref = impls.front().fn(model, params);
		for (const auto &z : impls) {
			const auto v = z.fn(model, params);
			values[z.name] = to_json(v);
			ok = ok && detail::values_match(ref, v);
		}
		if (!ok) {
			r.pass = false;
			r.witness = {{"params", params_to_json(model, params)}, {"values", values}};
		}
	});
	return r;
}

namespace detail {

template <WeightModel M>
QuantumState<typename M::scalar_type> random_state(std::size_t n, Rng &rng) {
	using T = typename M::scalar_type;
	QuantumState<T> s(n);
	for (SpinConfig mask = 0; mask <= QuantumState<T>::full_mask(n); ++mask)
		s.add(mask, Sampler<M>::scalar(rng));
	return s;
}

/// A point whose a and b weights against each listed point, in either order, are nonzero.
template <WeightModel M>
typename M::point_type draw_point_away(const M &model, Rng &rng, const std::vector<typename M::point_type> &avoid) {
	for (;;) {
		auto p = Sampler<M>::point(model, rng);
		bool ok = true;
		for (const auto &a : avoid) {
			const auto w = model.weights(p, a), v = model.weights(a, p);
			ok = ok && generic_nonzero(w.a) && generic_nonzero(w.b) && generic_nonzero(v.a) && generic_nonzero(v.b);
		}
		if (ok)
			return p;
	}
}

inline std::vector<std::size_t> subset_of(SpinConfig mask, std::size_t n) {
	std::vector<std::size_t> out;
	for (std::size_t j = 0; j < n; ++j)
		if ((mask >> j) & 1u)
			out.push_back(j);
	return out;
}

} // namespace detail

inline const std::vector<std::string> &qism_lemma_ids() {
	static const std::vector<std::string> ids{"vacuum-annihilation", "bb-commute",     "ab-exchange",
	                                          "qdet-scalar",         "qdet-central",   "bethe-eigen",
	                                          "bethe-distinct",      "null-vector",    "spin-flip"};
	return ids;
}

/// Operator identities of the monodromy matrix on random states.
template <WeightModel M>
PropertyReport check_qism_lemma(const std::string &id, const M &model, std::size_t n, std::uint64_t seed) {
	using T = typename M::scalar_type;
	using Point = typename M::point_type;
	auto r = detail::make_report(id, model, n, seed);
	detail::guarded(r, [&] {
		Rng rng(seed);
		auto params = draw_params(model, n, rng, true);
		auto fail = [&](json extra) {
			r.pass = false;
			r.witness = {{"params", params_to_json(model, params)}};
			for (auto &[k, v] : extra.items())
				r.witness[k] = v;
		};
		if (id == "vacuum-annihilation") {
			const Point l = Sampler<M>::point(model, rng);
			if (!check_vacuum_annihilation(model, params, l))
				fail({{"lambda", to_json(l)}});
		} else if (id == "bb-commute" || id == "ab-exchange" || id == "qdet-central") {
			const Point l = Sampler<M>::point(model, rng);
			const Point mu = detail::draw_point_away(model, rng, {l});
			const auto v = detail::random_state<M>(n, rng);
			bool ok = id == "bb-commute"    ? check_bb_commute(model, params, l, mu, v)
			          : id == "ab-exchange" ? check_ab_exchange(model, params, l, mu, v)
			                                : check_qdet_central(model, params, l, mu, v);
			if (!ok)
				fail({{"lambda", to_json(l)}, {"mu", to_json(mu)}});
		} else if (id == "qdet-scalar") {
			const Point l = Sampler<M>::point(model, rng);
			const auto v = detail::random_state<M>(n, rng);
			for (auto form : {QdetForm::first, QdetForm::second})
				if (!check_qdet_scalar(model, params, l, v, form)) {
					fail({{"lambda", to_json(l)}, {"form", static_cast<int>(form)}});
					return;
				}
		} else if (id == "bethe-eigen") {
			std::vector<Point> avoid = params.nus;
			for (const auto &nu : params.nus)
				avoid.push_back(model.shift_down(nu));
			const Point mu = detail::draw_point_away(model, rng, avoid);
			for (SpinConfig s = 0; s <= QuantumState<T>::full_mask(n); ++s) {
				const auto subset = detail::subset_of(s, n);
				if (!check_bethe_eigen(model, params, mu, subset)) {
					fail({{"mu", to_json(mu)}, {"subset", subset}});
					return;
				}
			}
		} else if (id == "bethe-distinct") {
			// eigenvalues as functions of mu, compared at three generic points
			std::vector<Point> avoid = params.nus;
			for (const auto &nu : params.nus)
				avoid.push_back(model.shift_down(nu));
			std::vector<Point> mus;
			for (int t = 0; t < 3; ++t)
				mus.push_back(detail::draw_point_away(model, rng, avoid));
			std::vector<std::vector<T>> seen;
			for (SpinConfig s = 0; s <= QuantumState<T>::full_mask(n); ++s) {
				const auto subset = detail::subset_of(s, n);
				std::vector<T> e;
				for (const auto &mu : mus)
					e.push_back(bethe_eigenvalue(model, params, mu, subset));
				for (const auto &other : seen) {
					bool same = true;
					for (std::size_t t = 0; t < e.size(); ++t)
						same = same && detail::values_match(e[t], other[t]);
					if (same) {
						fail({{"mu", to_json(mus)}, {"subset", subset}, {"eigenvalues", to_json(e)}});
						return;
					}
				}
				seen.push_back(e);
			}
		} else if (id == "null-vector" || id == "spin-flip") {
			for (std::size_t j = 0; j < n; ++j) {
				bool ok = id == "null-vector" ? check_null_vector(model, params, j) : check_spin_flip(model, params, j);
				if (!ok) {
					fail({{"j", j}});
					return;
				}
			}
		} else {
			throw std::invalid_argument("unknown lemma \"" + id + "\"");
		}
	});
	return r;
}

inline const std::vector<std::string> &property_check_ids() {
	static const std::vector<std::string> ids{"symmetry",    "degree",     "vanishing", "specialization",
	                                          "uniqueness",  "cross-representation"};
	return ids;
}

/// Which parts of the property matrix to run.
struct VerifyConfig {
	std::size_t n_min = 1;
	std::size_t n_max = 4;         ///< exact models
	std::size_t complex_n_max = 6; ///< floating-point trigonometric model
	std::size_t uniqueness_n_max = 3;
	std::size_t lemma_n_max = 4;   ///< random-state operator identities
	std::size_t flip_n_max = 6;    ///< null vectors and spin flips
	std::uint64_t seed = 0;
	std::size_t seeds = 20;
	std::set<std::string> checks; ///< empty: all
	std::set<ModelKind> models;   ///< empty: all
	bool inject_fault = false;

	bool wants(const std::string &check) const { return checks.empty() || checks.contains(check); }
	bool wants(ModelKind k) const { return models.empty() || models.contains(k); }
};

/// Runs every requested check for one model, reporting through sink(const PropertyReport&).
template <WeightModel M, typename Sink>
void run_property_matrix(const VerifyConfig &cfg, Sink &&sink) {
	if (!cfg.wants(M::kind))
		return;
	constexpr bool exact = scalar_traits<typename M::scalar_type>::exact;
	const std::size_t n_max = exact ? cfg.n_max : cfg.complex_n_max;
	for (std::size_t n = cfg.n_min; n <= std::max({n_max, cfg.lemma_n_max, cfg.flip_n_max}); ++n) {
		for (std::size_t s = 0; s < cfg.seeds; ++s) {
			const std::uint64_t seed = cfg.seed + s;
			Rng rng(seed);
			const M model = Sampler<M>::model(rng);
			const auto impls = z_implementations<M>(seed, cfg.inject_fault);
			if (n <= n_max) {
				for (const auto &z : impls) {
					if (cfg.wants("symmetry"))
						sink(check_symmetry(z, model, n, seed));
					if constexpr (exact)
						if (cfg.wants("degree"))
							sink(check_degree(z, model, n, seed));
					if (z.at_vanishing && cfg.wants("vanishing"))
						sink(check_vanishing(z, model, n, seed));
					if (z.at_specialization && cfg.wants("specialization"))
						sink(check_specialization(z, model, n, seed));
				}
				if (cfg.wants("cross-representation"))
					sink(check_agreement(impls, model, n, seed));
				if constexpr (exact)
					if (n <= cfg.uniqueness_n_max && cfg.wants("uniqueness"))
						sink(check_uniqueness(model, n, seed, cfg.inject_fault));
			}
			for (const auto &id : qism_lemma_ids()) {
				const bool flip = id == "null-vector" || id == "spin-flip";
				if (n <= (flip ? cfg.flip_n_max : cfg.lemma_n_max) && cfg.wants(id))
					sink(check_qism_lemma(id, model, n, seed));
			}
		}
	}
}

/// The full matrix over the rational, algebraic and complex models, in that order.
template <typename Sink>
void run_all_properties(const VerifyConfig &cfg, Sink &&sink) {
	run_property_matrix<RationalModel<Rational>>(cfg, sink);
	run_property_matrix<TrigAlgebraicModel<Rational>>(cfg, sink);
	run_property_matrix<TrigComplexModel>(cfg, sink);
}

} // namespace sixvertex

#endif
