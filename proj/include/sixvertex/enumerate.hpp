#ifndef SIXVERTEX_ENUMERATE_HPP
#define SIXVERTEX_ENUMERATE_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "numerics.hpp"

namespace sixvertex {

/// Largest lattice the exhaustive enumeration accepts (A(7) = 218348 configurations).
inline constexpr std::size_t kEnumCap = 7;

/**
 * Edge states around a vertex: 0 for an arrow pointing up or right, 1 for
 * down or left. Index by type - 1.
 */
struct VertexEdges {
	std::uint8_t left, right, bottom, top;
};

inline constexpr std::array<VertexEdges, 6> kVertexEdges{{
	{0, 0, 0, 0}, // 1: all right, all up
	{1, 1, 1, 1}, // 2: all left, all down
	{0, 0, 1, 1}, // 3: right, down
	{1, 1, 0, 0}, // 4: left, up
	{0, 1, 1, 0}, // 5: horizontal in, vertical out
	{1, 0, 0, 1}, // 6: horizontal out, vertical in
}};

/**
 * A configuration of the N x N lattice with domain wall boundaries.
 *
 * Column j counts from the right and row k from the top, both 0-based.
 */
class LatticeConfig {
public:
	explicit LatticeConfig(std::size_t n) : n_(n), types_(n * n, 0) {}

	std::size_t size() const { return n_; }
	int type(std::size_t j, std::size_t k) const { return types_[k * n_ + j]; }
	void set_type(std::size_t j, std::size_t k, int t) { types_[k * n_ + j] = static_cast<std::uint8_t>(t); }

	/// Number of vertices of each type 1..6 (index 0 unused).
	std::array<std::size_t, 7> type_counts() const {
		std::array<std::size_t, 7> c{};
		for (auto t : types_)
			++c[t];
		return c;
	}

	/// n x n grid of digits, top row first, leftmost column (j = n - 1) first.
	void dump(std::ostream &os) const {
		for (std::size_t k = 0; k < n_; ++k) {
			for (std::size_t j = n_; j-- > 0;)
				os << type(j, k);
			os << '\n';
		}
	}

	friend bool operator==(const LatticeConfig &, const LatticeConfig &) = default;

private:
	std::size_t n_;
	std::vector<std::uint8_t> types_;
};

/**
 * Throws std::logic_error unless cfg is a valid DWBC configuration:
 * matching arrows on internal edges, incoming arrows on top and bottom,
 * outgoing on left and right, the type-count relations n1 = n2, n3 = n4,
 * n5 + N = n6, and an odd number of c vertices on every line.
 */
inline void check_config(const LatticeConfig &cfg) {
	const std::size_t n = cfg.size();
	auto edges = [&](std::size_t j, std::size_t k) {
		int t = cfg.type(j, k);
		if (t < 1 || t > 6)
			throw std::logic_error("vertex type outside 1..6");
		return kVertexEdges[t - 1];
	};
	for (std::size_t k = 0; k < n; ++k) {
		for (std::size_t j = 0; j < n; ++j) {
			auto e = edges(j, k);
			if (j == 0 && e.right != 0)
				throw std::logic_error("right boundary arrow must point outward");
			if (j + 1 == n && e.left != 1)
				throw std::logic_error("left boundary arrow must point outward");
			if (k == 0 && e.top != 1)
				throw std::logic_error("top boundary arrow must point inward");
			if (k + 1 == n && e.bottom != 0)
				throw std::logic_error("bottom boundary arrow must point inward");
			if (j + 1 < n && e.left != edges(j + 1, k).right)
				throw std::logic_error("inconsistent horizontal edge");
			if (k + 1 < n && e.bottom != edges(j, k + 1).top)
				throw std::logic_error("inconsistent vertical edge");
		}
	}
	auto c = cfg.type_counts();
	if (c[1] != c[2] || c[3] != c[4] || c[5] + n != c[6])
		throw std::logic_error("vertex type counts violate n1=n2, n3=n4, n5+N=n6");
	for (std::size_t line = 0; line < n; ++line) {
		std::size_t row_c = 0, col_c = 0;
		for (std::size_t m = 0; m < n; ++m) {
			row_c += cfg.type(m, line) >= 5;
			col_c += cfg.type(line, m) >= 5;
		}
		if (row_c % 2 == 0 || col_c % 2 == 0)
			throw std::logic_error("every line must carry an odd number of c vertices");
	}
}

namespace detail {

/// One admissible filling of a lattice row.
struct RowFill {
	std::uint32_t bottom; ///< vertical edge states below the row, bit j for column j
	std::vector<std::uint8_t> types;
};

/**
 * All fillings of a row whose upper vertical edges are `top`, sweeping
 * right to left from the outgoing right-boundary arrow and ending on the
 * outgoing left-boundary arrow.
 */
inline std::vector<RowFill> row_fills(std::size_t n, std::uint32_t top) {
	std::vector<RowFill> out;
	std::vector<std::uint8_t> types(n);
	auto rec = [&](auto &&self, std::size_t j, int right, std::uint32_t bottom) -> void {
		if (j == n) {
			if (right == 1)
				out.push_back({bottom, types});
			return;
		}
		const int t = (top >> j) & 1u;
		for (int type = 1; type <= 6; ++type) {
			const auto &e = kVertexEdges[type - 1];
			if (e.right != right || e.top != t)
				continue;
			types[j] = static_cast<std::uint8_t>(type);
			self(self, j + 1, e.left, bottom | (std::uint32_t(e.bottom) << j));
		}
	};
	rec(rec, 0, 0, 0);
	return out;
}

class RowTable {
public:
	explicit RowTable(std::size_t n) : n_(n) {}
	const std::vector<RowFill> &fills(std::uint32_t top) {
		auto it = cache_.find(top);
		if (it == cache_.end())
			it = cache_.emplace(top, row_fills(n_, top)).first;
		return it->second;
	}

private:
	std::size_t n_;
	std::map<std::uint32_t, std::vector<RowFill>> cache_;
};

inline void check_enum_cap(std::size_t n) {
	if (n == 0)
		throw std::invalid_argument("lattice size must be positive");
	if (n > kEnumCap)
		throw ResourceLimit("enumeration: N = " + std::to_string(n) + " exceeds cap " + std::to_string(kEnumCap));
}

inline std::uint32_t all_down(std::size_t n) { return (std::uint32_t(1) << n) - 1; }

} // namespace detail

/**
 * Calls visit(const LatticeConfig&) for every configuration, each exactly
 * once, in a fixed order (rows top to bottom, row fillings by backtracking).
 * Every emitted configuration passes check_config.
 */
template <typename Visitor>
void for_each_config(std::size_t n, Visitor &&visit) {
	detail::check_enum_cap(n);
	detail::RowTable table(n);
	LatticeConfig cfg(n);
	auto rec = [&](auto &&self, std::size_t k, std::uint32_t top) -> void {
		if (k == n) {
			if (top == 0) {
				check_config(cfg);
				visit(static_cast<const LatticeConfig &>(cfg));
			}
			return;
		}
		for (const auto &fill : table.fills(top)) {
			for (std::size_t j = 0; j < n; ++j)
				cfg.set_type(j, k, fill.types[j]);
			self(self, k + 1, fill.bottom);
		}
	};
	rec(rec, 0, detail::all_down(n));
}

inline std::vector<LatticeConfig> enumerate_configs(std::size_t n) {
	std::vector<LatticeConfig> out;
	for_each_config(n, [&](const LatticeConfig &c) { out.push_back(c); });
	return out;
}

/// Number of DWBC configurations (alternating sign matrices of order n).
inline std::uint64_t asm_count(std::size_t n) {
	std::uint64_t count = 0;
	for_each_config(n, [&](const LatticeConfig &) { ++count; });
	return count;
}

struct EnumOptions {
	/// Split on the first row and sum subtrees on separate threads, reduced in order.
	bool parallel = false;
};

/**
 * Z_N as the definitional sum over configurations of products of weights.
 *
 * For the algebraic model the polynomial weights are summed and the result
 * divided by prod_j u_j v_j, giving the reduced function. The complex
 * model sums in quad precision. Accepts any parameters, coinciding ones
 * included.
 */
template <WeightModel M>
typename M::scalar_type z_enum(const M &model, const SpectralParams<M> &params, EnumOptions opts = {}) {
	using T = typename M::scalar_type;
	validate(model, params);
	const std::size_t n = params.size();
	detail::check_enum_cap(n);
	if constexpr (std::same_as<M, TrigComplexModel>) {
		// the signed sum cancels heavily; accumulate in quad precision
		auto quad = detail::quad_problem(model, params);
		return from_quad(z_enum(quad.model, quad.params, opts));
	}

	// weight[k][j][type]
	std::vector<std::vector<std::array<T, 7>>> weight(n, std::vector<std::array<T, 7>>(n));
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t j = 0; j < n; ++j) {
			auto w = model.weights(params.lambdas[j], params.nus[k]);
			weight[k][j] = {T(0), w.a, w.a, w.b, w.b, w.c, w.c};
		}
	auto row_weight = [&](std::size_t k, const detail::RowFill &fill) {
		T p(1);
		for (std::size_t j = 0; j < n; ++j)
			p *= weight[k][j][fill.types[j]];
		return p;
	};

	auto subtree = [&](detail::RowTable &table, std::size_t k0, std::uint32_t top0, const T &prefix) {
		T sum(0);
		auto rec = [&](auto &&self, std::size_t k, std::uint32_t top, const T &acc) -> void {
			if (k == n) {
				if (top == 0)
					sum += acc;
				return;
			}
			for (const auto &fill : table.fills(top)) {
				// remaining rows must be able to absorb the down arrows
				if (static_cast<std::size_t>(std::popcount(fill.bottom)) != n - k - 1)
					continue;
				self(self, k + 1, fill.bottom, acc * row_weight(k, fill));
			}
		};
		rec(rec, k0, top0, prefix);
		return sum;
	};

	T z(0);
	if (!opts.parallel || n == 1) {
		detail::RowTable table(n);
		z = subtree(table, 0, detail::all_down(n), T(1));
	} else {
		const auto first = detail::row_fills(n, detail::all_down(n));
		std::vector<std::future<T>> parts;
		for (const auto &fill : first) {
			parts.push_back(std::async(std::launch::async, [&, fill] {
				detail::RowTable table(n);
				return subtree(table, 1, fill.bottom, row_weight(0, fill));
			}));
		}
		for (auto &p : parts)
			z += p.get();
	}
	if constexpr (M::kind == ModelKind::trig_algebraic) {
		for (std::size_t j = 0; j < n; ++j)
			z /= params.lambdas[j].u * params.nus[j].u;
	}
	return z;
}

} // namespace sixvertex

#endif
