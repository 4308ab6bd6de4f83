#ifndef SIXVERTEX_QISM_HPP
#define SIXVERTEX_QISM_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "numerics.hpp"

namespace sixvertex {

/// Bit k set <=> spin down at site k + 1. Mask 0 is the all-up vacuum.
using SpinConfig = std::uint32_t;

/// Largest quantum-space size handled by the partition-function oracle.
inline constexpr std::size_t kDefaultQismCap = 14;

/**
 * Sparse vector in the 2^N dimensional spin space.
 *
 * Only nonzero amplitudes are stored. Complex states additionally drop
 * amplitudes below 1e-14 of the largest one after each operation.
 */
template <Field T>
class QuantumState {
public:
	explicit QuantumState(std::size_t n) : n_(n) {
		if (n == 0 || n > 31)
			throw std::invalid_argument("quantum state needs between 1 and 31 sites");
	}

	static QuantumState basis(std::size_t n, SpinConfig mask, T amp = T(1)) {
		QuantumState s(n);
		s.add(mask, amp);
		return s;
	}
	static QuantumState all_up(std::size_t n) { return basis(n, 0); }
	static QuantumState all_down(std::size_t n) { return basis(n, full_mask(n)); }
	static SpinConfig full_mask(std::size_t n) { return n >= 32 ? ~0u : ((SpinConfig(1) << n) - 1); }

	std::size_t sites() const { return n_; }
	const std::map<SpinConfig, T> &amplitudes() const { return amps_; }
	bool is_zero() const { return amps_.empty(); }

	T amplitude(SpinConfig mask) const {
		auto it = amps_.find(mask);
		return it == amps_.end() ? T(0) : it->second;
	}

	void add(SpinConfig mask, const T &amp) {
		if (mask > full_mask(n_))
			throw std::out_of_range("spin configuration outside the quantum space");
		auto [it, inserted] = amps_.try_emplace(mask, amp);
		if (!inserted)
			it->second += amp;
		if (sixvertex::is_zero(it->second))
			amps_.erase(it);
	}

	double max_magnitude() const {
		double m = 0.0;
		for (const auto &[mask, amp] : amps_)
			m = std::max(m, magnitude(amp));
		return m;
	}

	void prune() {
		if constexpr (!scalar_traits<T>::exact) {
			const double cut = 1e-14 * max_magnitude();
			std::erase_if(amps_, [cut](const auto &kv) { return magnitude(kv.second) < cut; });
		}
	}

	QuantumState &operator+=(const QuantumState &o) {
		check_sites(o);
		for (const auto &[mask, amp] : o.amps_)
			add(mask, amp);
		prune();
		return *this;
	}
	QuantumState &operator-=(const QuantumState &o) {
		check_sites(o);
		for (const auto &[mask, amp] : o.amps_)
			add(mask, -amp);
		prune();
		return *this;
	}
	QuantumState &operator*=(const T &s) {
		if (sixvertex::is_zero(s)) {
			amps_.clear();
			return *this;
		}
		for (auto &[mask, amp] : amps_)
			amp *= s;
		return *this;
	}
	friend QuantumState operator+(QuantumState a, const QuantumState &b) { return a += b; }
	friend QuantumState operator-(QuantumState a, const QuantumState &b) { return a -= b; }
	friend QuantumState operator*(const T &s, QuantumState a) { return a *= s; }

	friend bool operator==(const QuantumState &a, const QuantumState &b) {
		return a.n_ == b.n_ && a.amps_ == b.amps_;
	}

	/// Sets of spin-down counts present in the state.
	std::set<int> sectors() const {
		std::set<int> out;
		for (const auto &kv : amps_)
			out.insert(std::popcount(kv.first));
		return out;
	}

	/// One line per amplitude: the mask in binary (site 1 rightmost) and the value.
	void dump(std::ostream &os) const {
		for (const auto &[mask, amp] : amps_) {
			for (std::size_t k = n_; k-- > 0;)
				os << (((mask >> k) & 1u) ? '1' : '0');
			os << ' ' << amp << '\n';
		}
	}

private:
	void check_sites(const QuantumState &o) const {
		if (o.n_ != n_)
			throw std::invalid_argument("site-count mismatch between states");
	}

	std::size_t n_;
	std::map<SpinConfig, T> amps_;
};

/// Approximate equality of two states (exact for exact fields).
template <Field T>
bool states_equal(const QuantumState<T> &a, const QuantumState<T> &b, double rel_tol = kComplexTolerance) {
	if constexpr (scalar_traits<T>::exact) {
		return a == b;
	} else {
		double scale = std::max(a.max_magnitude(), b.max_magnitude());
		QuantumState<T> d = a - b;
		return d.max_magnitude() <= rel_tol * scale;
	}
}

/// Null test: exact zero, or max amplitude <= rel_tol * scale for complex states.
template <Field T>
bool is_null_state(const QuantumState<T> &s, double scale = 1.0, double rel_tol = 1e-10) {
	if constexpr (scalar_traits<T>::exact)
		return s.is_zero();
	else
		return s.max_magnitude() <= rel_tol * scale;
}

enum class MonodromyEntry { A, B, C, D };

/**
 * Applies an entry of T(lambda) = L_N(lambda, nu_N) ... L_1(lambda, nu_1).
 *
 * The auxiliary space is carried as a pair of states (auxiliary index 1, 2);
 * site k multiplies the pair by the 2x2 L-operator
 *   [ a pi+ + b pi-    c sigma- ]
 *   [ c sigma+         b pi+ + a pi- ]
 * whose entries act on site k. The requested entry is read off at the end.
 */
template <WeightModel M>
QuantumState<typename M::scalar_type> monodromy_apply(MonodromyEntry entry, const M &model,
                                                      const SpectralParams<M> &params,
                                                      const typename M::point_type &lambda,
                                                      const QuantumState<typename M::scalar_type> &state) {
	using T = typename M::scalar_type;
	const std::size_t n = params.size();
	if (state.sites() != n)
		throw std::invalid_argument("site-count mismatch between state and spectral parameters");

	const bool start_second = entry == MonodromyEntry::B || entry == MonodromyEntry::D;
	QuantumState<T> up(n), down(n); // auxiliary index 1 and 2
	(start_second ? down : up) = state;

	for (std::size_t k = 0; k < n; ++k) {
		const SpinConfig bit = SpinConfig(1) << k;
		const auto w = model.weights(lambda, params.nus[k]);
		QuantumState<T> next_up(n), next_down(n);
		for (const auto &[mask, amp] : up.amplitudes()) {
			if (mask & bit) {
				next_up.add(mask, w.b * amp);           // pi-
				next_down.add(mask & ~bit, w.c * amp);  // sigma+
			} else {
				next_up.add(mask, w.a * amp);           // pi+
			}
		}
		for (const auto &[mask, amp] : down.amplitudes()) {
			if (mask & bit) {
				next_down.add(mask, w.a * amp);         // pi-
			} else {
				next_up.add(mask | bit, w.c * amp);     // sigma-
				next_down.add(mask, w.b * amp);         // pi+
			}
		}
		next_up.prune();
		next_down.prune();
		up = std::move(next_up);
		down = std::move(next_down);
	}
	return (entry == MonodromyEntry::A || entry == MonodromyEntry::B) ? up : down;
}

/// B(lambda) with a check that the result lies one sector above the input.
template <WeightModel M>
QuantumState<typename M::scalar_type> apply_b(const M &model, const SpectralParams<M> &params,
                                              const typename M::point_type &lambda,
                                              const QuantumState<typename M::scalar_type> &state) {
	auto out = monodromy_apply(MonodromyEntry::B, model, params, lambda, state);
	const auto in_sectors = state.sectors();
	for (int s : out.sectors())
		if (!in_sectors.contains(s - 1))
			throw std::logic_error("B operator left the expected magnetization sector");
	return out;
}

namespace detail {

/// Amplitude of |all down> in B(lambda_N) ... B(lambda_1) |all up>.
template <WeightModel M>
typename M::scalar_type b_chain_amplitude(const M &model, const SpectralParams<M> &params) {
	using T = typename M::scalar_type;
	const std::size_t n = params.size();
	auto state = QuantumState<T>::all_up(n);
	for (const auto &lam : params.lambdas)
		state = apply_b(model, params, lam, state);
	return state.amplitude(QuantumState<T>::full_mask(n));
}

} // namespace detail

/**
 * Z_N = <all down| B(lambda_N) ... B(lambda_1) |all up>.
 *
 * For the algebraic model this returns the reduced function, obtained by
 * dividing out prod_j u_j v_j. The complex model runs the chain in quad
 * precision: the final amplitude comes out of heavy cancellation, losing
 * up to ~13 digits at N = 14. Works at coinciding parameters.
 */
template <WeightModel M>
typename M::scalar_type z_qism(const M &model, const SpectralParams<M> &params,
                               std::size_t cap = kDefaultQismCap) {
	using T = typename M::scalar_type;
	validate(model, params);
	const std::size_t n = params.size();
	if (n > cap)
		throw ResourceLimit("z_qism: N = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
	if constexpr (std::same_as<M, TrigComplexModel>) {
		auto quad = detail::quad_problem(model, params);
		return from_quad(detail::b_chain_amplitude(quad.model, quad.params));
	} else {
		T z = detail::b_chain_amplitude(model, params);
		if constexpr (M::kind == ModelKind::trig_algebraic) {
			for (std::size_t j = 0; j < n; ++j)
				z /= params.lambdas[j].u * params.nus[j].u;
		}
		return z;
	}
}

enum class QdetForm { first = 1, second = 2 };

/**
 * Quantum determinant:
 *   form 1: D(l) A(l - 1) - C(l) B(l - 1)
 *   form 2: A(l) D(l - 1) - B(l) C(l - 1)
 * with l - 1 realized by the model's shift.
 */
template <WeightModel M>
QuantumState<typename M::scalar_type> qdet_apply(const M &model, const SpectralParams<M> &params,
                                                 const typename M::point_type &lambda,
                                                 const QuantumState<typename M::scalar_type> &state,
                                                 QdetForm form) {
	const auto lower = model.shift_down(lambda);
	auto apply = [&](MonodromyEntry e, const typename M::point_type &p, const auto &s) {
		return monodromy_apply(e, model, params, p, s);
	};
	using E = MonodromyEntry;
	if (form == QdetForm::first)
		return apply(E::D, lambda, apply(E::A, lower, state)) - apply(E::C, lambda, apply(E::B, lower, state));
	return apply(E::A, lambda, apply(E::D, lower, state)) - apply(E::B, lambda, apply(E::C, lower, state));
}

/// Scalar by which the quantum determinant acts: a(lambda) d(lambda - 1).
template <WeightModel M>
typename M::scalar_type qdet_eigenvalue(const M &model, const SpectralParams<M> &params,
                                        const typename M::point_type &lambda) {
	auto upper = vacuum_eigenvalues(model, lambda, params.nus);
	auto lower = vacuum_eigenvalues(model, model.shift_down(lambda), params.nus);
	return upper.a * lower.d;
}

namespace detail {

inline void check_subset(const std::vector<std::size_t> &subset, std::size_t n) {
	std::set<std::size_t> seen;
	for (auto j : subset) {
		if (j >= n)
			throw std::out_of_range("Bethe vector index out of range");
		if (!seen.insert(j).second)
			throw std::invalid_argument("Bethe vector indices must be distinct");
	}
}

} // namespace detail

/// prod_{j in subset} B(nu_j - 1) |all up>; indices are 0-based.
template <WeightModel M>
QuantumState<typename M::scalar_type> bethe_vector(const M &model, const SpectralParams<M> &params,
                                                   const std::vector<std::size_t> &subset) {
	using T = typename M::scalar_type;
	detail::check_subset(subset, params.size());
	auto state = QuantumState<T>::all_up(params.size());
	// B operators commute; apply the rightmost factor first.
	for (auto it = subset.rbegin(); it != subset.rend(); ++it)
		state = apply_b(model, params, model.shift_down(params.nus[*it]), state);
	return state;
}

/// A(mu) eigenvalue of a Bethe vector: a(mu) prod_{j in subset} f(nu_j - 1, mu).
template <WeightModel M>
typename M::scalar_type bethe_eigenvalue(const M &model, const SpectralParams<M> &params,
                                         const typename M::point_type &mu, const std::vector<std::size_t> &subset) {
	detail::check_subset(subset, params.size());
	auto value = vacuum_eigenvalues(model, mu, params.nus).a;
	for (auto j : subset)
		value *= r_matrix_f(model, model.shift_down(params.nus[j]), mu);
	return value;
}

/// B(nu_j) B(nu_k - 1) |all up>. Vanishes for j == k.
template <WeightModel M>
QuantumState<typename M::scalar_type> null_vector_candidate(const M &model, const SpectralParams<M> &params,
                                                            std::size_t j, std::size_t k) {
	if (j >= params.size() || k >= params.size())
		throw std::out_of_range("null vector index out of range");
	using T = typename M::scalar_type;
	auto s = apply_b(model, params, model.shift_down(params.nus[k]), QuantumState<T>::all_up(params.size()));
	return apply_b(model, params, params.nus[j], s);
}

/// Typical amplitude scale used to judge complex null states: prod_l |a(nu_j, nu_l)|.
template <WeightModel M>
double state_scale(const M &model, const SpectralParams<M> &params, std::size_t j) {
	return std::max(1.0, magnitude(vacuum_eigenvalues(model, params.nus[j], params.nus).a));
}

/// True iff B(nu_j) B(nu_j - 1) |all up> is the zero vector.
template <WeightModel M>
bool check_null_vector(const M &model, const SpectralParams<M> &params, std::size_t j) {
	return is_null_state(null_vector_candidate(model, params, j, j), state_scale(model, params, j));
}

/**
 * True iff B(nu_j) flips spin j of |up ... up down ... down> (sites below j
 * down) with amplitude a(nu_j). Index j is 0-based.
 */
template <WeightModel M>
bool check_spin_flip(const M &model, const SpectralParams<M> &params, std::size_t j) {
	using T = typename M::scalar_type;
	const std::size_t n = params.size();
	if (j >= n)
		throw std::out_of_range("spin flip index out of range");
	const SpinConfig before = (SpinConfig(1) << j) - 1;
	const SpinConfig after = (SpinConfig(1) << (j + 1)) - 1;
	auto out = monodromy_apply(MonodromyEntry::B, model, params, params.nus[j], QuantumState<T>::basis(n, before));
	auto expected = QuantumState<T>::basis(n, after, vacuum_eigenvalues(model, params.nus[j], params.nus).a);
	return states_equal(out, expected);
}

/// [B(lambda), B(mu)] v == 0.
template <WeightModel M>
bool check_bb_commute(const M &model, const SpectralParams<M> &params, const typename M::point_type &lambda,
                      const typename M::point_type &mu, const QuantumState<typename M::scalar_type> &v) {
	using E = MonodromyEntry;
	auto lhs = monodromy_apply(E::B, model, params, lambda, monodromy_apply(E::B, model, params, mu, v));
	auto rhs = monodromy_apply(E::B, model, params, mu, monodromy_apply(E::B, model, params, lambda, v));
	return states_equal(lhs, rhs);
}

/// A(mu) B(lambda) v == f(lambda, mu) B(lambda) A(mu) v + g(mu, lambda) B(mu) A(lambda) v.
template <WeightModel M>
bool check_ab_exchange(const M &model, const SpectralParams<M> &params, const typename M::point_type &lambda,
                       const typename M::point_type &mu, const QuantumState<typename M::scalar_type> &v) {
	using E = MonodromyEntry;
	auto op = [&](E e, const typename M::point_type &p, const auto &s) {
		return monodromy_apply(e, model, params, p, s);
	};
	auto lhs = op(E::A, mu, op(E::B, lambda, v));
	auto rhs = r_matrix_f(model, lambda, mu) * op(E::B, lambda, op(E::A, mu, v)) +
	           r_matrix_g(model, mu, lambda) * op(E::B, mu, op(E::A, lambda, v));
	return states_equal(lhs, rhs);
}

/// qdet(lambda) v == a(lambda) d(lambda - 1) v for the given form.
template <WeightModel M>
bool check_qdet_scalar(const M &model, const SpectralParams<M> &params, const typename M::point_type &lambda,
                       const QuantumState<typename M::scalar_type> &v, QdetForm form) {
	return states_equal(qdet_apply(model, params, lambda, v, form), qdet_eigenvalue(model, params, lambda) * v);
}

/// qdet(lambda) X(mu) v == X(mu) qdet(lambda) v for X in {A, B, C, D}.
template <WeightModel M>
bool check_qdet_central(const M &model, const SpectralParams<M> &params, const typename M::point_type &lambda,
                        const typename M::point_type &mu, const QuantumState<typename M::scalar_type> &v) {
	for (auto e : {MonodromyEntry::A, MonodromyEntry::B, MonodromyEntry::C, MonodromyEntry::D}) {
		auto lhs = qdet_apply(model, params, lambda, monodromy_apply(e, model, params, mu, v), QdetForm::first);
		auto rhs = monodromy_apply(e, model, params, mu, qdet_apply(model, params, lambda, v, QdetForm::first));
		if (!states_equal(lhs, rhs))
			return false;
	}
	return true;
}

/// A(mu) applied to the Bethe vector equals its predicted eigenvalue times the vector.
template <WeightModel M>
bool check_bethe_eigen(const M &model, const SpectralParams<M> &params, const typename M::point_type &mu,
                       const std::vector<std::size_t> &subset) {
	auto v = bethe_vector(model, params, subset);
	if (v.is_zero())
		return false;
	auto av = monodromy_apply(MonodromyEntry::A, model, params, mu, v);
	return states_equal(av, bethe_eigenvalue(model, params, mu, subset) * v);
}

/// C(lambda) |all up> == 0.
template <WeightModel M>
bool check_vacuum_annihilation(const M &model, const SpectralParams<M> &params, const typename M::point_type &lambda) {
	using T = typename M::scalar_type;
	auto out = monodromy_apply(MonodromyEntry::C, model, params, lambda, QuantumState<T>::all_up(params.size()));
	return out.is_zero();
}

} // namespace sixvertex

#endif
