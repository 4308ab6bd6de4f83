#ifndef SIXVERTEX_POLYBASIS_HPP
#define SIXVERTEX_POLYBASIS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "numerics.hpp"

namespace sixvertex {

/**
 * n polynomials of degree at most n - 1, stored by coefficients:
 * p_i(z) = sum_j coeffs(i, j) z^j.
 *
 * Construction rejects coefficient matrices with zero determinant, since
 * those polynomials do not span the space.
 */
template <Field T>
class PolyBasis {
public:
	explicit PolyBasis(SquareMatrix<T> coeffs) : coeffs_(std::move(coeffs)) {
		qn_ = determinant(coeffs_);
		if (is_zero(qn_))
			throw std::invalid_argument("coefficient matrix is singular, polynomials do not form a basis");
	}

	std::size_t size() const { return coeffs_.order(); }
	const SquareMatrix<T> &coeffs() const { return coeffs_; }
	/// det of the coefficient matrix.
	const T &qn() const { return qn_; }

	/// p_i(z) by Horner's rule.
	T eval(std::size_t i, const T &z) const {
		const std::size_t n = size();
		T acc = coeffs_(i, n - 1);
		for (std::size_t j = n - 1; j-- > 0;)
			acc = acc * z + coeffs_(i, j);
		return acc;
	}

private:
	SquareMatrix<T> coeffs_;
	T qn_;
};

template <Field T>
PolyBasis<T> monomial_basis(std::size_t n) {
	return PolyBasis<T>(SquareMatrix<T>::identity(n));
}

/// p_k(z) = prod_{l != k} (z - points_l), expanded to coefficients.
template <Field T>
PolyBasis<T> lagrange_basis(const std::vector<T> &points) {
	const std::size_t n = points.size();
	if (n == 0)
		throw std::invalid_argument("lagrange basis needs at least one point");
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = a + 1; b < n; ++b)
			if (is_zero(points[a] - points[b]))
				throw std::invalid_argument("degenerate Lagrange basis: coinciding points");
	SquareMatrix<T> c(n);
	for (std::size_t k = 0; k < n; ++k) {
		std::vector<T> poly{T(1)};
		for (std::size_t l = 0; l < n; ++l) {
			if (l == k)
				continue;
			std::vector<T> next(poly.size() + 1, T(0));
			for (std::size_t d = 0; d < poly.size(); ++d) {
				next[d + 1] += poly[d];
				next[d] -= points[l] * poly[d];
			}
			poly = std::move(next);
		}
		for (std::size_t d = 0; d < n; ++d)
			c(k, d) = poly[d];
	}
	return PolyBasis<T>(std::move(c));
}

/// Integer coefficients uniform in [-9, 9], redrawn until the basis condition holds.
template <Field T>
PolyBasis<T> random_basis(std::size_t n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> coeff(-9, 9);
	for (int attempt = 0; attempt < 100; ++attempt) {
		SquareMatrix<T> c(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				c(i, j) = T(coeff(rng));
		if (!is_zero(determinant(c)))
			return PolyBasis<T>(std::move(c));
	}
	throw std::runtime_error("random_basis: no invertible coefficient matrix after 100 attempts");
}

/// Matrix [p_k(z_j)] with rows indexed by points and columns by polynomials.
template <Field T>
SquareMatrix<T> eval_basis_matrix(const PolyBasis<T> &basis, const std::vector<T> &zs) {
	const std::size_t n = basis.size();
	if (zs.size() != n)
		throw std::invalid_argument("eval_basis_matrix: need exactly n points");
	SquareMatrix<T> m(n);
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = 0; k < n; ++k)
			m(j, k) = basis.eval(k, zs[j]);
	return m;
}

template <Field T>
T qn(const PolyBasis<T> &basis) { return basis.qn(); }

} // namespace sixvertex

#endif
