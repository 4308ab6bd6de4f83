#include <sstream>

#include <gtest/gtest.h>

#include <sixvertex/enumerate.hpp>
#include <sixvertex/qism.hpp>
#include <sixvertex/verify.hpp>

using namespace sixvertex;

namespace {

using RatModel = RationalModel<Rational>;
using AlgModel = TrigAlgebraicModel<Rational>;
using RatParams = SpectralParams<RatModel>;
using RatState = QuantumState<Rational>;

Rational rq(long p, long q = 1) { return Rational(p, q); }

RatParams rat(std::vector<Rational> l, std::vector<Rational> n) { return {std::move(l), std::move(n)}; }

} // namespace

TEST(QuantumState, BasicOperations) {
	auto s = RatState::basis(3, 5, rq(2));
	s.add(5, rq(-2));
	EXPECT_TRUE(s.is_zero());
	EXPECT_EQ(RatState::all_down(3).amplitude(7), rq(1));
	EXPECT_THROW(RatState(0), std::invalid_argument);
	EXPECT_THROW(s.add(8, rq(1)), std::out_of_range);
	auto t = RatState::basis(3, 1) + RatState::basis(3, 6, rq(3));
	EXPECT_EQ(t.sectors(), (std::set<int>{1, 2}));
	EXPECT_THROW(t += RatState::all_up(2), std::invalid_argument);
}

TEST(QuantumState, DumpFormat) {
	auto s = RatState::basis(3, 1, rq(-1, 2)) + RatState::basis(3, 4, rq(3));
	std::ostringstream os;
	s.dump(os);
	EXPECT_EQ(os.str(), "001 -1/2\n100 3\n");
}

TEST(Monodromy, VacuumActions) {
	RatModel m;
	auto p = rat({rq(0), rq(0)}, {rq(0), rq(2)});
	const auto up = RatState::all_up(2);
	EXPECT_TRUE(monodromy_apply(MonodromyEntry::C, m, p, rq(7, 3), up).is_zero());
	EXPECT_EQ(monodromy_apply(MonodromyEntry::A, m, p, rq(5), up), vacuum_eigenvalues(m, rq(5), p.nus).a * up);
	EXPECT_EQ(monodromy_apply(MonodromyEntry::D, m, p, rq(5), up), vacuum_eigenvalues(m, rq(5), p.nus).d * up);
	EXPECT_EQ(apply_b(m, p, rq(0), up), RatState::basis(2, 1, rq(-1)));
	EXPECT_THROW(monodromy_apply(MonodromyEntry::A, m, p, rq(0), RatState::all_up(3)), std::invalid_argument);
}

TEST(ZQism, Examples) {
	RatModel m;
	EXPECT_EQ(z_qism(m, rat({rq(2), rq(5)}, {rq(0), rq(1)})), rq(20));
	EXPECT_EQ(z_qism(m, rat({rq(9, 2)}, {rq(-3)})), rq(1));
	EXPECT_EQ(z_qism(m, rat({rq(0), rq(2)}, {rq(0), rq(2)})), rq(-3));
	EXPECT_EQ(z_qism(m, rat({rq(0), rq(-1)}, {rq(0), rq(2)})), rq(0));
	AlgModel am(rq(2));
	SpectralParams<AlgModel> ap{{AlgebraicPoint<Rational>::from_root(rq(3))}, {AlgebraicPoint<Rational>::from_root(rq(5, 2))}};
	EXPECT_EQ(z_qism(am, ap), rq(3, 2));
}

TEST(ZQism, CapRaisesResourceLimit) {
	RatModel m;
	std::vector<Rational> xs(4, rq(0));
	EXPECT_THROW(z_qism(m, rat(xs, xs), 3), ResourceLimit);
}

TEST(ZQism, MatchesEnumerationInAllModes) {
	Rng rng(31);
	for (std::size_t n = 1; n <= 5; ++n)
		for (int t = 0; t < 25; ++t) {
			RatModel rm;
			auto rp = draw_params(rm, n, rng);
			EXPECT_EQ(z_qism(rm, rp), z_enum(rm, rp));

			auto am = Sampler<AlgModel>::model(rng);
			auto ap = draw_params(am, n, rng);
			EXPECT_EQ(z_qism(am, ap), z_enum(am, ap));

			auto cm = Sampler<TrigComplexModel>::model(rng);
			auto cp = draw_params(cm, n, rng);
			EXPECT_TRUE(scalar_equal(z_qism(cm, cp), z_enum(cm, cp)));
		}
}

TEST(QuantumDeterminant, Examples) {
	RatModel m;
	auto p = rat({rq(0), rq(0)}, {rq(0), rq(2)});
	const auto up = RatState::all_up(2);
	EXPECT_EQ(qdet_eigenvalue(m, p, rq(0)), rq(-3));
	EXPECT_EQ(qdet_apply(m, p, rq(0), up, QdetForm::first), rq(-3) * up);
	EXPECT_EQ(qdet_apply(m, p, rq(0), up, QdetForm::second), rq(-3) * up);
}

TEST(QuantumDeterminant, ScalarAndCentral) {
	RatModel m;
	Rng rng(32);
	for (std::size_t n = 1; n <= 4; ++n) {
		auto p = draw_params(m, n, rng);
		auto v = RatState(n);
		for (SpinConfig mask = 0; mask <= RatState::full_mask(n); ++mask)
			v.add(mask, draw_rational(rng));
		const Rational lam = draw_rational(rng), mu = draw_rational(rng);
		EXPECT_TRUE(check_qdet_scalar(m, p, lam, v, QdetForm::first));
		EXPECT_TRUE(check_qdet_scalar(m, p, lam, v, QdetForm::second));
		EXPECT_TRUE(check_qdet_central(m, p, lam, mu, v));
	}
}

TEST(Commutation, BBAndAB) {
	RatModel m;
	Rng rng(33);
	for (std::size_t n = 1; n <= 4; ++n) {
		auto p = draw_params(m, n, rng);
		auto v = RatState(n);
		for (SpinConfig mask = 0; mask <= RatState::full_mask(n); ++mask)
			v.add(mask, draw_rational(rng));
		Rational lam = draw_rational(rng), mu = draw_rational(rng);
		while (mu == lam || mu == lam + rq(1) || mu == lam - rq(1))
			mu = draw_rational(rng);
		EXPECT_TRUE(check_bb_commute(m, p, lam, mu, v));
		EXPECT_TRUE(check_ab_exchange(m, p, lam, mu, v));
	}
}

TEST(BetheVectors, EmptySubsetIsVacuum) {
	RatModel m;
	auto p = rat({rq(0), rq(0), rq(0)}, {rq(1), rq(4), rq(-2)});
	EXPECT_EQ(bethe_vector(m, p, {}), RatState::all_up(3));
	EXPECT_EQ(bethe_eigenvalue(m, p, rq(3), {}), vacuum_eigenvalues(m, rq(3), p.nus).a);
	EXPECT_THROW(bethe_vector(m, p, {0, 0}), std::invalid_argument);
	EXPECT_THROW(bethe_vector(m, p, {3}), std::out_of_range);
}

TEST(BetheVectors, AreEigenvectorsOfA) {
	RatModel m;
	Rng rng(34);
	for (std::size_t n = 1; n <= 4; ++n) {
		auto p = draw_params(m, n, rng);
		for (SpinConfig mask = 0; mask <= RatState::full_mask(n); ++mask) {
			std::vector<std::size_t> subset;
			for (std::size_t j = 0; j < n; ++j)
				if (mask & (1u << j))
					subset.push_back(j);
			EXPECT_TRUE(check_bethe_eigen(m, p, draw_rational(rng), subset));
		}
	}
}

TEST(NullVector, VanishesOnlyOnDiagonal) {
	RatModel m;
	auto p = rat({rq(0), rq(0)}, {rq(0), rq(2)});
	EXPECT_TRUE(check_null_vector(m, p, 0));
	EXPECT_TRUE(check_null_vector(m, p, 1));
	EXPECT_FALSE(null_vector_candidate(m, p, 0, 1).is_zero());
	Rng rng(35);
	for (std::size_t n = 1; n <= 6; ++n) {
		auto rp = draw_params(m, n, rng);
		for (std::size_t j = 0; j < n; ++j)
			EXPECT_TRUE(check_null_vector(m, rp, j));
		auto cm = Sampler<TrigComplexModel>::model(rng);
		auto cp = draw_params(cm, n, rng);
		for (std::size_t j = 0; j < n; ++j)
			EXPECT_TRUE(check_null_vector(cm, cp, j));
	}
}

TEST(SpinFlip, FlipsOneSite) {
	RatModel m;
	Rng rng(36);
	for (std::size_t n = 1; n <= 6; ++n) {
		auto p = draw_params(m, n, rng);
		for (std::size_t j = 0; j < n; ++j)
			EXPECT_TRUE(check_spin_flip(m, p, j));
		auto am = Sampler<AlgModel>::model(rng);
		auto ap = draw_params(am, n, rng);
		for (std::size_t j = 0; j < n; ++j)
			EXPECT_TRUE(check_spin_flip(am, ap, j));
	}
	EXPECT_THROW(check_spin_flip(m, rat({rq(0)}, {rq(0)}), 1), std::out_of_range);
}
