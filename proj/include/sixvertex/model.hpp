#ifndef SIXVERTEX_MODEL_HPP
#define SIXVERTEX_MODEL_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"

namespace sixvertex {

enum class ModelKind { rational, trig_complex, trig_algebraic };

inline const char *to_string(ModelKind k) {
	switch (k) {
	case ModelKind::rational: return "rational";
	case ModelKind::trig_complex: return "trig-complex";
	case ModelKind::trig_algebraic: return "trig-algebraic";
	}
	return "?";
}

/// Weights a = w1 = w2, b = w3 = w4, c = w5 = w6 of one vertex.
template <Field T>
struct VertexWeights {
	T a, b, c;
};

/**
 * Rational weights a = lambda - nu + 1, b = lambda - nu, c = 1.
 *
 * The scalar type is a template parameter so the same weights can be
 * evaluated exactly or in complex floating point.
 */
template <Field T = Rational>
class RationalModel {
public:
	using scalar_type = T;
	using point_type = T;
	static constexpr ModelKind kind = ModelKind::rational;

	VertexWeights<T> weights(const T &lambda, const T &nu) const {
		T b = lambda - nu;
		return {b + T(1), b, T(1)};
	}
	/// The point lambda - 1.
	T shift_down(const T &lambda) const { return lambda - T(1); }
	/// The point lambda + 1.
	T shift_up(const T &lambda) const { return lambda + T(1); }
	/// Polynomial variable carried by a point.
	const T &coordinate(const T &lambda) const { return lambda; }
	/// Factor contributed by the pair (lo, hi) to the Vandermonde product.
	T vandermonde_factor(const T &lo, const T &hi) const { return hi - lo; }
};

/// Trigonometric weights sin(gamma(lambda - nu + 1)), sin(gamma(lambda - nu)), sin(gamma).
class TrigComplexModel {
public:
	using scalar_type = Complex;
	using point_type = Complex;
	static constexpr ModelKind kind = ModelKind::trig_complex;

	explicit TrigComplexModel(double gamma) : gamma_(gamma) {
		if (std::abs(std::sin(gamma)) < 1e-12)
			throw ConsistencyError("gamma must not be a multiple of pi");
	}

	double gamma() const { return gamma_; }

	VertexWeights<Complex> weights(const Complex &lambda, const Complex &nu) const {
		Complex t = lambda - nu;
		return {std::sin(gamma_ * (t + 1.0)), std::sin(gamma_ * t), Complex(std::sin(gamma_), 0.0)};
	}
	Complex shift_down(const Complex &lambda) const { return lambda - 1.0; }
	Complex shift_up(const Complex &lambda) const { return lambda + 1.0; }
	const Complex &coordinate(const Complex &lambda) const { return lambda; }
	Complex vandermonde_factor(const Complex &lo, const Complex &hi) const {
		return std::sin(gamma_ * (hi - lo));
	}

private:
	double gamma_;
};

/// A point x = q^{2 lambda} of the algebraic parametrization, with its square root u.
template <Field T>
struct AlgebraicPoint {
	T x;
	T u;

	static AlgebraicPoint from_root(const T &u) { return {u * u, u}; }
	friend bool operator==(const AlgebraicPoint &, const AlgebraicPoint &) = default;
};

/**
 * Trigonometric model in the multiplicative variables x, y and q.
 *
 * Each vertex weight is multiplied by the gauge factor 2i(x y)^{1/2} = 2i u v,
 * leaving the polynomial weights
 *   a = q x - y / q,  b = x - y,  c = (q - 1/q) u v.
 * Summing products of these over all configurations gives the reduced
 * partition function times prod_j u_j v_j.
 */
template <Field T = Rational>
class TrigAlgebraicModel {
public:
	using scalar_type = T;
	using point_type = AlgebraicPoint<T>;
	static constexpr ModelKind kind = ModelKind::trig_algebraic;

	explicit TrigAlgebraicModel(T q) : q_(std::move(q)) {
		if (is_zero(q_))
			throw ConsistencyError("q must be invertible");
		q_inv_ = T(1) / q_;
		if (is_zero(q_ - q_inv_))
			throw ConsistencyError("q must differ from 1/q");
	}

	const T &q() const { return q_; }
	const T &q_inv() const { return q_inv_; }
	T q_minus_q_inv() const { return q_ - q_inv_; }

	VertexWeights<T> weights(const point_type &lambda, const point_type &nu) const {
		return {q_ * lambda.x - q_inv_ * nu.x, lambda.x - nu.x, (q_ - q_inv_) * lambda.u * nu.u};
	}
	/// x -> x / q^2, u -> u / q.
	point_type shift_down(const point_type &p) const {
		return {p.x * q_inv_ * q_inv_, p.u * q_inv_};
	}
	point_type shift_up(const point_type &p) const { return {p.x * q_ * q_, p.u * q_}; }
	const T &coordinate(const point_type &p) const { return p.x; }
	T vandermonde_factor(const point_type &lo, const point_type &hi) const { return hi.x - lo.x; }

	/// Throws ConsistencyError unless u^2 == x (exact fields) or approximately so.
	void check_point(const point_type &p) const {
		T diff = p.u * p.u - p.x;
		if constexpr (scalar_traits<T>::exact) {
			if (!is_zero(diff))
				throw ConsistencyError("algebraic point requires u^2 == x");
		} else {
			if (magnitude(diff) > 1e-12 * std::max(1.0, magnitude(p.x)))
				throw ConsistencyError("algebraic point requires u^2 == x");
		}
		if (is_zero(p.u))
			throw ConsistencyError("algebraic point requires u != 0");
	}

private:
	T q_;
	T q_inv_;
};

template <typename M>
concept WeightModel = requires(const M &m, const typename M::point_type &p) {
	typename M::scalar_type;
	typename M::point_type;
	{ M::kind } -> std::convertible_to<ModelKind>;
	{ m.weights(p, p) } -> std::same_as<VertexWeights<typename M::scalar_type>>;
	{ m.shift_down(p) } -> std::same_as<typename M::point_type>;
	{ m.shift_up(p) } -> std::same_as<typename M::point_type>;
	{ m.vandermonde_factor(p, p) } -> std::same_as<typename M::scalar_type>;
};

/// The two ordered sets of spectral parameters (columns and rows).
template <WeightModel M>
struct SpectralParams {
	using point_type = typename M::point_type;
	std::vector<point_type> lambdas;
	std::vector<point_type> nus;

	std::size_t size() const { return lambdas.size(); }
};

template <WeightModel M>
void validate(const M &model, const SpectralParams<M> &params) {
	if (params.lambdas.empty())
		throw std::invalid_argument("spectral parameter lists must be nonempty");
	if (params.lambdas.size() != params.nus.size())
		throw std::invalid_argument("lambda and nu lists must have equal length");
	if constexpr (M::kind == ModelKind::trig_algebraic) {
		for (const auto &p : params.lambdas)
			model.check_point(p);
		for (const auto &p : params.nus)
			model.check_point(p);
	}
}

namespace detail {

/// The complex trigonometric weights in quad precision, for the B-chain only.
struct QuadTrigModel {
	using scalar_type = QuadComplex;
	using point_type = QuadComplex;
	static constexpr ModelKind kind = ModelKind::trig_complex;

	QuadComplex gamma;

	VertexWeights<QuadComplex> weights(const QuadComplex &lambda, const QuadComplex &nu) const {
		const QuadComplex t = lambda - nu;
		return {sin(gamma * (t + 1)), sin(gamma * t), sin(gamma)};
	}
	QuadComplex shift_down(const QuadComplex &lambda) const { return lambda - 1; }
	QuadComplex shift_up(const QuadComplex &lambda) const { return lambda + 1; }
	QuadComplex vandermonde_factor(const QuadComplex &lo, const QuadComplex &hi) const { return sin(gamma * (hi - lo)); }
};

template <typename Params>
struct QuadProblem {
	QuadTrigModel model;
	Params params;
};

/// The same problem in quad precision; inputs convert exactly.
inline QuadProblem<SpectralParams<QuadTrigModel>> quad_problem(const TrigComplexModel &model,
                                                          const SpectralParams<TrigComplexModel> &params) {
	QuadProblem<SpectralParams<QuadTrigModel>> out{{QuadComplex(model.gamma())}, {}};
	for (std::size_t j = 0; j < params.size(); ++j) {
		out.params.lambdas.push_back(to_quad(params.lambdas[j]));
		out.params.nus.push_back(to_quad(params.nus[j]));
	}
	return out;
}

} // namespace detail

template <WeightModel M>
VertexWeights<typename M::scalar_type> vertex_weights(const M &model, const typename M::point_type &lambda,
                                                      const typename M::point_type &nu) {
	if constexpr (M::kind == ModelKind::trig_algebraic) {
		model.check_point(lambda);
		model.check_point(nu);
	}
	return model.weights(lambda, nu);
}

template <Field T>
struct VacuumEigenvalues {
	T a; ///< eigenvalue of A(lambda) on the all-up state
	T d; ///< eigenvalue of D(lambda) on the all-up state
};

/// a(lambda) = prod_k a(lambda, nu_k), d(lambda) = prod_k b(lambda, nu_k).
template <WeightModel M>
VacuumEigenvalues<typename M::scalar_type> vacuum_eigenvalues(const M &model, const typename M::point_type &lambda,
                                                              const std::vector<typename M::point_type> &nus) {
	using T = typename M::scalar_type;
	T a(1), d(1);
	for (const auto &nu : nus) {
		auto w = model.weights(lambda, nu);
		a *= w.a;
		d *= w.b;
	}
	return {a, d};
}

template <WeightModel M>
VacuumEigenvalues<typename M::scalar_type> vacuum_eigenvalues(const M &model, const typename M::point_type &lambda,
                                                              const SpectralParams<M> &params) {
	return vacuum_eigenvalues(model, lambda, params.nus);
}

/// prod_{j<k} factor(z_j, z_k); one for a single point.
template <WeightModel M>
typename M::scalar_type vandermonde(const M &model, const std::vector<typename M::point_type> &zs) {
	if (zs.empty())
		throw std::invalid_argument("vandermonde of an empty list");
	typename M::scalar_type v(1);
	for (std::size_t j = 0; j < zs.size(); ++j)
		for (std::size_t k = j + 1; k < zs.size(); ++k)
			v *= model.vandermonde_factor(zs[j], zs[k]);
	return v;
}

/// R-matrix function f(lambda, mu) = a(lambda, mu) / b(lambda, mu).
template <WeightModel M>
typename M::scalar_type r_matrix_f(const M &model, const typename M::point_type &lambda,
                                   const typename M::point_type &mu) {
	auto w = model.weights(lambda, mu);
	return w.a / w.b;
}

/// R-matrix function g(lambda, mu) = c / b(lambda, mu).
template <WeightModel M>
typename M::scalar_type r_matrix_g(const M &model, const typename M::point_type &lambda,
                                   const typename M::point_type &mu) {
	auto w = model.weights(lambda, mu);
	return w.c / w.b;
}

/// Image of real trigonometric parameters in the multiplicative variables.
struct AlgebraicImage {
	std::vector<Complex> x;
	std::vector<Complex> y;
	Complex q;
	/// (2i)^{N^2} prod_j (x_j y_j)^{(N-1)/2}; the reduced function equals Z_N times this.
	Complex prefactor;
};

/**
 * x_j = q^{2 lambda_j}, y_k = q^{2 nu_k}, q = e^{i gamma}.
 *
 * Square roots are taken as (x_j y_j)^{1/2} = e^{i gamma (lambda_j + nu_j)},
 * which is phase-consistent with the gauge factor of the algebraic model.
 */
inline AlgebraicImage to_algebraic(const std::vector<double> &lambdas, const std::vector<double> &nus, double gamma) {
	if (lambdas.size() != nus.size() || lambdas.empty())
		throw std::invalid_argument("lambda and nu lists must be nonempty and of equal length");
	if (std::abs(std::sin(gamma)) < 1e-12)
		throw ConsistencyError("gamma must not be a multiple of pi");
	const long n = static_cast<long>(lambdas.size());
	const Complex i(0.0, 1.0);
	AlgebraicImage img;
	img.q = std::exp(i * gamma);
	img.prefactor = scalar_pow(Complex(0.0, 2.0), n * n);
	for (std::size_t j = 0; j < lambdas.size(); ++j) {
		img.x.push_back(std::exp(2.0 * i * gamma * lambdas[j]));
		img.y.push_back(std::exp(2.0 * i * gamma * nus[j]));
		img.prefactor *= std::exp(i * gamma * (lambdas[j] + nus[j]) * static_cast<double>(n - 1));
	}
	return img;
}

/// The trigonometric problem rewritten as an algebraic one over complex numbers.
struct AlgebraicProblem {
	TrigAlgebraicModel<Complex> model;
	SpectralParams<TrigAlgebraicModel<Complex>> params;
	Complex prefactor;
};

inline AlgebraicProblem algebraic_image(const TrigComplexModel &model, const SpectralParams<TrigComplexModel> &params) {
	const double gamma = model.gamma();
	const Complex i(0.0, 1.0);
	auto root = [&](const Complex &l) {
		Complex u = std::exp(i * gamma * l);
		return AlgebraicPoint<Complex>{u * u, u};
	};
	AlgebraicProblem p{TrigAlgebraicModel<Complex>(std::exp(i * gamma)), {}, {}};
	const long n = static_cast<long>(params.size());
	p.prefactor = scalar_pow(Complex(0.0, 2.0), n * n);
	for (std::size_t j = 0; j < params.size(); ++j) {
		auto x = root(params.lambdas[j]);
		auto y = root(params.nus[j]);
		p.params.lambdas.push_back(x);
		p.params.nus.push_back(y);
		p.prefactor *= scalar_pow(x.u * y.u, n - 1);
	}
	return p;
}

} // namespace sixvertex

#endif
