#ifndef SIXVERTEX_NUMERICS_HPP
#define SIXVERTEX_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/complex128.hpp>
#include <gmpxx.h>

namespace sixvertex {

/**
 * Exact arbitrary-precision rational number.
 *
 * Always kept in canonical form: numerator and denominator coprime and the
 * denominator positive. Division by zero throws std::domain_error.
 */
class Rational {
public:
	Rational() = default;
	Rational(long v) : v_(v) {} // NOLINT: implicit on purpose, integers are rationals
	Rational(long num, long den) {
		if (den == 0)
			throw std::domain_error("rational with zero denominator");
		v_ = mpq_class(num, den);
		v_.canonicalize();
	}
	explicit Rational(const mpq_class &v) : v_(v) { v_.canonicalize(); }

	/// Parses "p", "p/q" or "-p/q" (decimal integers only).
	static Rational parse(const std::string &s) {
		if (s.empty())
			throw std::invalid_argument("empty rational literal");
		mpq_class v;
		if (v.set_str(s, 10) != 0)
			throw std::invalid_argument("malformed rational literal: " + s);
		if (v.get_den() == 0)
			throw std::domain_error("rational with zero denominator: " + s);
		v.canonicalize();
		return Rational(v);
	}

	const mpq_class &get() const { return v_; }
	std::string num_str() const { return v_.get_num().get_str(); }
	std::string den_str() const { return v_.get_den().get_str(); }
	bool is_zero() const { return sgn(v_) == 0; }
	int sign() const { return sgn(v_); }
	double to_double() const { return v_.get_d(); }

	/// "p/q", or "p" when the denominator is one.
	std::string to_string() const {
		if (v_.get_den() == 1)
			return num_str();
		return num_str() + "/" + den_str();
	}

	Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
	Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
	Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
	Rational &operator/=(const Rational &o) {
		if (o.is_zero())
			throw std::domain_error("rational division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
		return os << r.to_string();
	}

private:
	mpq_class v_{0};
};

using Complex = std::complex<double>;
/// Extended working precision for complex determinant evaluation.
using WideComplex = std::complex<long double>;
/// Quad precision for sums with heavy cancellation (the complex B-chain).
using QuadComplex = boost::multiprecision::complex128;

/// Per-field properties used by generic algorithms.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
	static constexpr bool exact = true;
	static constexpr const char *name = "rational";
	static bool is_zero(const Rational &v) { return v.is_zero(); }
	static double magnitude(const Rational &v) { return std::abs(v.to_double()); }
};

template <>
struct scalar_traits<Complex> {
	static constexpr bool exact = false;
	static constexpr const char *name = "complex";
	// exact zero only; tolerances belong to verification code
	static bool is_zero(const Complex &v) { return v == Complex(0.0, 0.0); }
	static double magnitude(const Complex &v) { return std::abs(v); }
};

template <>
struct scalar_traits<WideComplex> {
	static constexpr bool exact = false;
	static constexpr const char *name = "complex";
	static bool is_zero(const WideComplex &v) { return v == WideComplex(0.0L, 0.0L); }
	static double magnitude(const WideComplex &v) { return static_cast<double>(std::abs(v)); }
};

template <>
struct scalar_traits<QuadComplex> {
	static constexpr bool exact = false;
	static constexpr const char *name = "complex";
	static bool is_zero(const QuadComplex &v) { return v == QuadComplex(0); }
	static double magnitude(const QuadComplex &v) { return static_cast<double>(abs(v)); }
};

inline WideComplex widen(const Complex &z) { return {z.real(), z.imag()}; }
inline Complex narrow(const WideComplex &z) {
	return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline QuadComplex to_quad(const Complex &z) { return {z.real(), z.imag()}; }
inline Complex from_quad(const QuadComplex &z) {
	return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <typename T>
concept Field = requires { scalar_traits<T>::exact; };

template <Field T>
bool is_zero(const T &v) { return scalar_traits<T>::is_zero(v); }

template <Field T>
double magnitude(const T &v) { return scalar_traits<T>::magnitude(v); }

/// Default relative tolerance for comparing complex results.
inline constexpr double kComplexTolerance = 1e-9;

/// Equality used by verification: exact for rationals, relative for complex.
inline bool scalar_equal(const Rational &a, const Rational &b, double = 0.0) { return a == b; }

inline bool scalar_equal(const Complex &a, const Complex &b, double rel_tol = kComplexTolerance) {
	double scale = std::max(std::abs(a), std::abs(b));
	return std::abs(a - b) <= rel_tol * scale;
}

/// s^e by repeated squaring. Negative exponents require s != 0.
template <Field T>
T scalar_pow(const T &s, long e) {
	if (e < 0) {
		if (is_zero(s))
			throw std::domain_error("zero raised to a negative power");
		return T(1) / scalar_pow(s, -e);
	}
	T result(1);
	T base = s;
	while (e > 0) {
		if (e & 1)
			result *= base;
		e >>= 1;
		if (e > 0)
			base *= base;
	}
	return result;
}

/// (-1)^e as a scalar.
template <Field T>
T sign_power(long e) { return (e % 2 == 0) ? T(1) : T(-1); }

/**
 * Running product that stays representable in floating point.
 *
 * Exact fields just multiply. For complex values the magnitude is tracked as
 * a separate power-of-two exponent so that long products of O(1) factors
 * (N^2 weights at N = 50) neither overflow nor underflow before the final
 * combination.
 */
template <Field T>
class ProductAccumulator {
public:
	void mul(const T &v) { value_ *= v; }
	void div(const T &v) { value_ /= v; }
	T value() const { return value_; }
	bool is_zero() const { return sixvertex::is_zero(value_); }

private:
	T value_{1};
};

template <std::floating_point R>
class ProductAccumulator<std::complex<R>> {
public:
	using value_type = std::complex<R>;

	void mul(const value_type &v) { mant_ *= v; renormalize(); }
	void div(const value_type &v) {
		if (v == value_type(0, 0))
			throw std::domain_error("complex division by zero");
		mant_ /= v;
		renormalize();
	}
	value_type value() const { return {std::ldexp(mant_.real(), exp_), std::ldexp(mant_.imag(), exp_)}; }
	bool is_zero() const { return mant_ == value_type(0, 0); }

private:
	void renormalize() {
		R m = std::max(std::abs(mant_.real()), std::abs(mant_.imag()));
		if (m == 0 || !std::isfinite(m))
			return;
		int e = 0;
		std::frexp(m, &e);
		mant_ = {std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e)};
		exp_ += e;
	}

	value_type mant_{1, 0};
	int exp_ = 0;
};

/// Dense n x n matrix, row-major; entry (j, k) is row j, column k (0-based).
template <Field T>
class SquareMatrix {
public:
	explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {
		if (n == 0)
			throw std::invalid_argument("matrix order must be positive");
	}
	SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
		: SquareMatrix(rows.size()) {
		std::size_t j = 0;
		for (const auto &row : rows) {
			if (row.size() != n_)
				throw std::invalid_argument("matrix rows must all have length n");
			std::size_t k = 0;
			for (const auto &v : row)
				(*this)(j, k++) = v;
			++j;
		}
	}

	static SquareMatrix identity(std::size_t n) {
		SquareMatrix m(n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = T(1);
		return m;
	}

	std::size_t order() const { return n_; }
	T &operator()(std::size_t j, std::size_t k) { return data_[j * n_ + k]; }
	const T &operator()(std::size_t j, std::size_t k) const { return data_[j * n_ + k]; }

	void swap_rows(std::size_t a, std::size_t b) {
		if (a == b)
			return;
		for (std::size_t k = 0; k < n_; ++k)
			std::swap((*this)(a, k), (*this)(b, k));
	}

	friend SquareMatrix operator*(const SquareMatrix &x, const SquareMatrix &y) {
		if (x.n_ != y.n_)
			throw std::invalid_argument("matrix order mismatch");
		SquareMatrix r(x.n_);
		for (std::size_t i = 0; i < x.n_; ++i)
			for (std::size_t l = 0; l < x.n_; ++l)
				for (std::size_t k = 0; k < x.n_; ++k)
					r(i, k) += x(i, l) * y(l, k);
		return r;
	}

	friend bool operator==(const SquareMatrix &x, const SquareMatrix &y) {
		return x.n_ == y.n_ && x.data_ == y.data_;
	}

private:
	std::size_t n_;
	std::vector<T> data_;
};

struct DeterminantDiagnostics {
	/// Set when a complex pivot fell below 1e-300 in magnitude.
	bool pivot_underflow = false;
};

inline constexpr double kPivotUnderflow = 1e-300;

/**
 * Multiplies det(m) into acc using Gaussian elimination.
 *
 * Exact fields pick the first nonzero pivot in the column; complex matrices
 * use partial pivoting on magnitude. A singular matrix yields a zero product.
 */
template <Field T>
DeterminantDiagnostics accumulate_determinant(SquareMatrix<T> m, ProductAccumulator<T> &acc) {
	DeterminantDiagnostics diag;
	const std::size_t n = m.order();
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t pivot = n;
		if constexpr (scalar_traits<T>::exact) {
			for (std::size_t r = col; r < n; ++r) {
				if (!is_zero(m(r, col))) {
					pivot = r;
					break;
				}
			}
		} else {
			decltype(std::abs(m(0, 0))) best = 0;
			for (std::size_t r = col; r < n; ++r) {
				auto mag = std::abs(m(r, col));
				if (mag > best) {
					best = mag;
					pivot = r;
				}
			}
		}
		if (pivot == n) {
			acc.mul(T(0));
			return diag;
		}
		if (pivot != col) {
			m.swap_rows(pivot, col);
			acc.mul(T(-1));
		}
		const T p = m(col, col);
		if constexpr (!scalar_traits<T>::exact) {
			if (magnitude(p) < kPivotUnderflow)
				diag.pivot_underflow = true;
		}
		acc.mul(p);
		for (std::size_t r = col + 1; r < n; ++r) {
			if (is_zero(m(r, col)))
				continue;
			const T factor = m(r, col) / p;
			for (std::size_t k = col + 1; k < n; ++k)
				m(r, k) -= factor * m(col, k);
		}
	}
	return diag;
}

template <Field T>
struct DeterminantResult {
	T value;
	DeterminantDiagnostics diagnostics;
};

template <Field T>
DeterminantResult<T> determinant_with_diagnostics(const SquareMatrix<T> &m) {
	ProductAccumulator<T> acc;
	auto diag = accumulate_determinant(m, acc);
	return {acc.value(), diag};
}

template <Field T>
T determinant(const SquareMatrix<T> &m) {
	return determinant_with_diagnostics(m).value;
}

/// Complex image of an exact matrix.
inline SquareMatrix<Complex> to_complex(const SquareMatrix<Rational> &m) {
	SquareMatrix<Complex> r(m.order());
	for (std::size_t j = 0; j < m.order(); ++j)
		for (std::size_t k = 0; k < m.order(); ++k)
			r(j, k) = Complex(m(j, k).to_double(), 0.0);
	return r;
}

inline Complex to_complex(const Rational &r) { return {r.to_double(), 0.0}; }

} // namespace sixvertex

#endif
