#ifndef SIXVERTEX_DETREP_HPP
#define SIXVERTEX_DETREP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "numerics.hpp"
#include "polybasis.hpp"

namespace sixvertex {

enum class Representation { ik, kostov, fw1, fw2, basis_rat, basis_trig1, basis_trig2 };

inline const char *to_string(Representation r) {
	switch (r) {
	case Representation::ik: return "ik";
	case Representation::kostov: return "kostov";
	case Representation::fw1: return "fw1";
	case Representation::fw2: return "fw2";
	case Representation::basis_rat: return "basis-rat";
	case Representation::basis_trig1: return "basis-trig1";
	case Representation::basis_trig2: return "basis-trig2";
	}
	return "?";
}

inline std::optional<Representation> parse_representation(const std::string &s) {
	for (auto r : {Representation::ik, Representation::kostov, Representation::fw1, Representation::fw2,
	               Representation::basis_rat, Representation::basis_trig1, Representation::basis_trig2})
		if (s == to_string(r))
			return r;
	return std::nullopt;
}

inline bool supports(ModelKind kind, Representation r) {
	switch (r) {
	case Representation::ik: return true;
	case Representation::kostov:
	case Representation::basis_rat: return kind == ModelKind::rational;
	case Representation::fw1:
	case Representation::fw2: return kind == ModelKind::trig_complex;
	case Representation::basis_trig1:
	case Representation::basis_trig2: return kind != ModelKind::rational;
	}
	return false;
}

inline bool needs_basis(Representation r) {
	return r == Representation::basis_rat || r == Representation::basis_trig1 || r == Representation::basis_trig2;
}

namespace detail {

template <WeightModel M>
void require_distinct(const M &model, const std::vector<typename M::point_type> &zs, const char *what) {
	for (std::size_t j = 0; j < zs.size(); ++j)
		for (std::size_t k = j + 1; k < zs.size(); ++k)
			if (is_zero(model.vandermonde_factor(zs[j], zs[k])))
				throw SingularConfiguration(std::string("singular parameter configuration: coinciding ") + what);
}

/// sin(gamma t) in extended precision; complex determinants lose digits to cancellation otherwise.
inline WideComplex wide_sin(long double gamma, const WideComplex &t) { return std::sin(gamma * t); }

template <WeightModel M>
std::vector<typename M::scalar_type> coordinates(const M &model, const std::vector<typename M::point_type> &zs) {
	std::vector<typename M::scalar_type> out;
	out.reserve(zs.size());
	for (const auto &z : zs)
		out.push_back(model.coordinate(z));
	return out;
}

} // namespace detail

/**
 * The ik determinant
 *   Z_N = (-1)^{N(N-1)/2} prod a b / (v(lambda) v(nu)) det[c / (a b)]
 * for the rational and complex trigonometric weights.
 */
template <WeightModel M>
	requires(M::kind == ModelKind::rational)
typename M::scalar_type z_ik(const M &model, const SpectralParams<M> &params) {
	using T = typename M::scalar_type;
	validate(model, params);
	detail::require_distinct(model, params.lambdas, "lambdas");
	detail::require_distinct(model, params.nus, "nus");
	const std::size_t n = params.size();
	ProductAccumulator<T> acc;
	SquareMatrix<T> m(n);
	for (std::size_t j = 0; j < n; ++j) {
		for (std::size_t k = 0; k < n; ++k) {
			auto w = model.weights(params.lambdas[j], params.nus[k]);
			T ab = w.a * w.b;
			if (is_zero(ab))
				throw SingularConfiguration("singular parameter configuration: vanishing a or b weight");
			acc.mul(ab);
			m(j, k) = w.c / ab;
		}
	}
	const long nn = static_cast<long>(n);
	acc.mul(sign_power<T>(nn * (nn - 1) / 2));
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k) {
			acc.div(model.vandermonde_factor(params.lambdas[j], params.lambdas[k]));
			acc.div(model.vandermonde_factor(params.nus[j], params.nus[k]));
		}
	accumulate_determinant(std::move(m), acc);
	return acc.value();
}

/// Complex trigonometric case of the same determinant, evaluated in extended precision.
inline Complex z_ik(const TrigComplexModel &model, const SpectralParams<TrigComplexModel> &params) {
	validate(model, params);
	detail::require_distinct(model, params.lambdas, "lambdas");
	detail::require_distinct(model, params.nus, "nus");
	const std::size_t n = params.size();
	const long double g = model.gamma();
	const WideComplex c = std::sin(WideComplex(g, 0.0L));
	ProductAccumulator<WideComplex> acc;
	SquareMatrix<WideComplex> m(n);
	for (std::size_t j = 0; j < n; ++j) {
		for (std::size_t k = 0; k < n; ++k) {
			const WideComplex t = widen(params.lambdas[j]) - widen(params.nus[k]);
			const WideComplex ab = detail::wide_sin(g, t + 1.0L) * detail::wide_sin(g, t);
			if (is_zero(ab))
				throw SingularConfiguration("singular parameter configuration: vanishing a or b weight");
			acc.mul(ab);
			m(j, k) = c / ab;
		}
	}
	const long nn = static_cast<long>(n);
	acc.mul(sign_power<WideComplex>(nn * (nn - 1) / 2));
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k) {
			acc.div(detail::wide_sin(g, widen(params.lambdas[k]) - widen(params.lambdas[j])));
			acc.div(detail::wide_sin(g, widen(params.nus[k]) - widen(params.nus[j])));
		}
	accumulate_determinant(std::move(m), acc);
	return narrow(acc.value());
}

/**
 * ik form of the reduced function in the algebraic variables:
 *   prod_j a(x_j) d(x_j) / prod_{j<k} (x_k - x_j)(y_j - y_k)
 *     * det[(q - 1/q) / ((x_j - y_k)(q x_j - y_k / q))].
 */
template <Field T>
T z_ik(const TrigAlgebraicModel<T> &model, const SpectralParams<TrigAlgebraicModel<T>> &params) {
	validate(model, params);
	detail::require_distinct(model, params.lambdas, "x");
	detail::require_distinct(model, params.nus, "y");
	const std::size_t n = params.size();
	const T qq = model.q_minus_q_inv();
	ProductAccumulator<T> acc;
	SquareMatrix<T> m(n);
	for (std::size_t j = 0; j < n; ++j) {
		const T &x = params.lambdas[j].x;
		for (std::size_t k = 0; k < n; ++k) {
			const T &y = params.nus[k].x;
			T ab = (x - y) * (model.q() * x - model.q_inv() * y);
			if (is_zero(ab))
				throw SingularConfiguration("singular parameter configuration: vanishing a or b weight");
			acc.mul(ab);
			m(j, k) = qq / ab;
		}
	}
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k) {
			acc.div(params.lambdas[k].x - params.lambdas[j].x);
			acc.div(params.nus[j].x - params.nus[k].x);
		}
	accumulate_determinant(std::move(m), acc);
	return acc.value();
}

/**
 * The kostov determinant (rational weights only):
 *   Z_N = prod a / v(lambda) det[lambda_j^{k-1} - (lambda_j + 1)^{k-1} prod_l b/a].
 */
template <Field T>
T z_kostov(const RationalModel<T> &model, const SpectralParams<RationalModel<T>> &params) {
	validate(model, params);
	detail::require_distinct(model, params.lambdas, "lambdas");
	const std::size_t n = params.size();
	ProductAccumulator<T> acc;
	SquareMatrix<T> m(n);
	for (std::size_t j = 0; j < n; ++j) {
		const T &lam = params.lambdas[j];
		T ratio(1);
		for (std::size_t l = 0; l < n; ++l) {
			auto w = model.weights(lam, params.nus[l]);
			if (is_zero(w.a))
				throw SingularConfiguration("singular parameter configuration: vanishing a weight");
			acc.mul(w.a);
			ratio *= w.b / w.a;
		}
		T pw(1), pw_shift(1);
		const T shifted = lam + T(1);
		for (std::size_t k = 0; k < n; ++k) {
			m(j, k) = pw - pw_shift * ratio;
			pw *= lam;
			pw_shift *= shifted;
		}
	}
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k)
			acc.div(params.lambdas[k] - params.lambdas[j]);
	accumulate_determinant(std::move(m), acc);
	return acc.value();
}

enum class TrigVariant { first = 1, second = 2 };

/**
 * fw determinant for the trigonometric weights.
 *
 * Variant 1 uses the phase e^{i gamma (2k - N)} and the prefactor
 * prod_j e^{-(N-2) i gamma lambda_j - i gamma nu_j}; variant 2 uses
 * e^{i gamma (2k - 2 - N)} and prod_j e^{-N i gamma lambda_j + i gamma nu_j}.
 * k runs over 1..N in both phases.
 */
inline Complex z_fw(TrigVariant variant, const TrigComplexModel &model, const SpectralParams<TrigComplexModel> &params) {
	validate(model, params);
	detail::require_distinct(model, params.lambdas, "lambdas");
	const std::size_t n = params.size();
	const long double nd = static_cast<long double>(n);
	const long double g = model.gamma();
	const WideComplex i(0.0L, 1.0L);
	const bool first = variant == TrigVariant::first;

	ProductAccumulator<WideComplex> acc;
	SquareMatrix<WideComplex> m(n);
	for (std::size_t j = 0; j < n; ++j) {
		const WideComplex lam = widen(params.lambdas[j]);
		WideComplex ratio(1.0L, 0.0L);
		for (std::size_t l = 0; l < n; ++l) {
			const WideComplex t = lam - widen(params.nus[l]);
			const WideComplex a = detail::wide_sin(g, t + 1.0L);
			if (is_zero(a))
				throw SingularConfiguration("singular parameter configuration: vanishing a weight");
			acc.mul(a);
			ratio *= detail::wide_sin(g, t) / a;
		}
		for (std::size_t k = 1; k <= n; ++k) {
			const long double kd = static_cast<long double>(k);
			const long double phase = first ? (2.0L * kd - nd) : (2.0L * kd - 2.0L - nd);
			m(j, k - 1) = std::exp(2.0L * i * g * lam * (kd - 1.0L)) * (1.0L - std::exp(i * g * phase) * ratio);
		}
		const WideComplex nu = widen(params.nus[j]);
		if (first)
			acc.mul(std::exp(-(nd - 2.0L) * i * g * lam - i * g * nu));
		else
			acc.mul(std::exp(-nd * i * g * lam + i * g * nu));
	}
	for (std::size_t e = 0; e < n * (n - 1) / 2; ++e)
		acc.div(WideComplex(0.0L, 2.0L));
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k)
			acc.div(detail::wide_sin(g, widen(params.lambdas[k]) - widen(params.lambdas[j])));
	accumulate_determinant(std::move(m), acc);
	return narrow(acc.value());
}

/**
 * Basis-parametrized determinant for the rational weights:
 *   Z_N = det[p_k(l_j) a(l_j) - p_k(l_j + 1) d(l_j)] / det[p_k(l_j)].
 * The value does not depend on the basis.
 */
template <Field T>
T z_basis_rat(const RationalModel<T> &model, const SpectralParams<RationalModel<T>> &params, const PolyBasis<T> &basis) {
	validate(model, params);
	const std::size_t n = params.size();
	if (basis.size() != n)
		throw std::invalid_argument("basis size must equal N");
	detail::require_distinct(model, params.lambdas, "lambdas");
	SquareMatrix<T> num(n);
	for (std::size_t j = 0; j < n; ++j) {
		const T &lam = params.lambdas[j];
		const T up = model.shift_up(lam);
		auto ev = vacuum_eigenvalues(model, lam, params.nus);
		for (std::size_t k = 0; k < n; ++k)
			num(j, k) = basis.eval(k, lam) * ev.a - basis.eval(k, up) * ev.d;
	}
	ProductAccumulator<T> acc;
	accumulate_determinant(std::move(num), acc);
	ProductAccumulator<T> den;
	accumulate_determinant(eval_basis_matrix(basis, params.lambdas), den);
	if (den.is_zero())
		throw SingularConfiguration("singular parameter configuration: basis matrix is singular");
	return acc.value() / den.value();
}

/**
 * Basis-parametrized determinant for the reduced trigonometric function:
 *   variant 1: det[p_k(x_j) a(x_j) - q^{2-N} p_k(q^2 x_j) d(x_j)] / (prod y_k det[p_k(x_j)])
 *   variant 2: det[p_k(x_j) a(x_j) - q^{-N}  p_k(q^2 x_j) d(x_j)] / (prod x_j det[p_k(x_j)])
 */
template <Field T>
T z_basis_trig(TrigVariant variant, const TrigAlgebraicModel<T> &model,
               const SpectralParams<TrigAlgebraicModel<T>> &params, const PolyBasis<T> &basis) {
	validate(model, params);
	const std::size_t n = params.size();
	if (basis.size() != n)
		throw std::invalid_argument("basis size must equal N");
	detail::require_distinct(model, params.lambdas, "x");
	const long nn = static_cast<long>(n);
	const bool first = variant == TrigVariant::first;
	const T qpow = scalar_pow(model.q(), first ? 2 - nn : -nn);
	const T q2 = model.q() * model.q();

	SquareMatrix<T> num(n);
	ProductAccumulator<T> den;
	for (std::size_t j = 0; j < n; ++j) {
		const T &x = params.lambdas[j].x;
		auto ev = vacuum_eigenvalues(model, params.lambdas[j], params.nus);
		const T x_up = q2 * x;
		for (std::size_t k = 0; k < n; ++k)
			num(j, k) = basis.eval(k, x) * ev.a - qpow * basis.eval(k, x_up) * ev.d;
		const T &scale = first ? params.nus[j].x : x;
		if (is_zero(scale))
			throw SingularConfiguration("singular parameter configuration: zero x or y");
		den.mul(scale);
	}
	ProductAccumulator<T> acc;
	accumulate_determinant(std::move(num), acc);
	accumulate_determinant(eval_basis_matrix(basis, detail::coordinates(model, params.lambdas)), den);
	if (den.is_zero())
		throw SingularConfiguration("singular parameter configuration: basis matrix is singular");
	return acc.value() / den.value();
}

/// Reduced function of real trigonometric parameters via their algebraic image, evaluated in extended precision.
inline Complex z_basis_trig(TrigVariant variant, const TrigComplexModel &model,
                            const SpectralParams<TrigComplexModel> &params, const PolyBasis<Complex> &basis) {
	validate(model, params);
	const std::size_t n = params.size();
	if (basis.size() != n)
		throw std::invalid_argument("basis size must equal N");
	const long double g = model.gamma();
	const WideComplex i(0.0L, 1.0L);
	auto root = [&](const Complex &l) {
		const WideComplex u = std::exp(i * g * widen(l));
		return AlgebraicPoint<WideComplex>{u * u, u};
	};
	SpectralParams<TrigAlgebraicModel<WideComplex>> wide;
	for (std::size_t j = 0; j < n; ++j) {
		wide.lambdas.push_back(root(params.lambdas[j]));
		wide.nus.push_back(root(params.nus[j]));
	}
	SquareMatrix<WideComplex> coeffs(n);
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = 0; k < n; ++k)
			coeffs(j, k) = widen(basis.coeffs()(j, k));
	const TrigAlgebraicModel<WideComplex> wide_model(std::exp(i * g));
	return narrow(z_basis_trig(variant, wide_model, wide, PolyBasis<WideComplex>(std::move(coeffs))));
}

/// Z_N = reduced / ((2i)^{N^2} prod_j (x_j y_j)^{(N-1)/2}) for real trigonometric parameters.
inline Complex partition_from_reduced(const Complex &reduced, const TrigComplexModel &model,
                                      const SpectralParams<TrigComplexModel> &params) {
	return reduced / algebraic_image(model, params).prefactor;
}

} // namespace sixvertex

#endif
