#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include <sixvertex/enumerate.hpp>
#include <sixvertex/verify.hpp>

using namespace sixvertex;

namespace {

using RatModel = RationalModel<Rational>;
using AlgModel = TrigAlgebraicModel<Rational>;
using RatParams = SpectralParams<RatModel>;

Rational rq(long p, long q = 1) { return Rational(p, q); }

RatParams rat(std::vector<Rational> l, std::vector<Rational> n) { return {std::move(l), std::move(n)}; }

} // namespace

TEST(Enumerate, SingleSiteIsTypeSix) {
	auto configs = enumerate_configs(1);
	ASSERT_EQ(configs.size(), 1u);
	EXPECT_EQ(configs[0].type(0, 0), 6);
}

TEST(Enumerate, CountsAreAlternatingSignMatrices) {
	const std::uint64_t expected[] = {1, 2, 7, 42, 429};
	for (std::size_t n = 1; n <= 5; ++n)
		EXPECT_EQ(asm_count(n), expected[n - 1]);
}

TEST(Enumerate, EveryConfigurationIsValid) {
	for (std::size_t n = 1; n <= 5; ++n) {
		auto configs = enumerate_configs(n);
		for (const auto &c : configs) {
			EXPECT_NO_THROW(check_config(c));
			auto counts = c.type_counts();
			EXPECT_EQ(counts[5] + n, counts[6]);
		}
		for (std::size_t i = 1; i < configs.size(); ++i)
			EXPECT_FALSE(configs[i] == configs[i - 1]);
	}
}

TEST(Enumerate, CheckConfigRejectsBrokenLattice) {
	LatticeConfig c(2);
	c.set_type(0, 0, 1);
	c.set_type(1, 0, 6);
	c.set_type(0, 1, 6);
	c.set_type(1, 1, 2);
	EXPECT_THROW(check_config(c), std::logic_error);
	LatticeConfig empty(1);
	EXPECT_THROW(check_config(empty), std::logic_error);
}

TEST(Enumerate, DumpGrid) {
	auto configs = enumerate_configs(2);
	std::ostringstream os;
	for (const auto &c : configs)
		c.dump(os);
	EXPECT_EQ(os.str().size(), 2u * 2u * 3u);
	EXPECT_NE(os.str().find("6"), std::string::npos);
}

TEST(Enumerate, CapRaisesResourceLimit) {
	RatModel m;
	std::vector<Rational> xs(kEnumCap + 1, rq(0));
	for (std::size_t j = 0; j < xs.size(); ++j)
		xs[j] = rq(static_cast<long>(j));
	EXPECT_THROW(z_enum(m, rat(xs, xs)), ResourceLimit);
}

TEST(ZEnum, Examples) {
	RatModel m;
	EXPECT_EQ(z_enum(m, rat({rq(2), rq(5)}, {rq(0), rq(1)})), rq(20));
	EXPECT_EQ(z_enum(m, rat({rq(0), rq(-1)}, {rq(0), rq(2)})), rq(0));
	EXPECT_EQ(z_enum(m, rat({rq(-4, 3)}, {rq(7)})), rq(1));
	AlgModel am(rq(3));
	SpectralParams<AlgModel> ap{{AlgebraicPoint<Rational>::from_root(rq(2))}, {AlgebraicPoint<Rational>::from_root(rq(-5))}};
	EXPECT_EQ(z_enum(am, ap), rq(3) - rq(1, 3));
}

TEST(ZEnum, SymmetricInLambdaAndNu) {
	RatModel m;
	Rng rng(41);
	for (std::size_t n = 2; n <= 5; ++n) {
		auto p = draw_params(m, n, rng);
		const Rational ref = z_enum(m, p);
		auto q = p;
		std::rotate(q.lambdas.begin(), q.lambdas.begin() + 1, q.lambdas.end());
		EXPECT_EQ(z_enum(m, q), ref);
		q = p;
		std::swap(q.nus.front(), q.nus.back());
		EXPECT_EQ(z_enum(m, q), ref);
	}
}

TEST(ZEnum, ReductionAtFirstNu) {
	RatModel m;
	EXPECT_EQ(z_enum(m, rat({rq(0), rq(5)}, {rq(0), rq(2)})), rq(-6));
	Rng rng(42);
	for (std::size_t n = 2; n <= 5; ++n)
		for (int t = 0; t < 5; ++t) {
			auto p = draw_params(m, n, rng);
			p.lambdas[0] = p.nus[0];
			Rational factor(1);
			for (std::size_t k = 1; k < n; ++k)
				factor *= p.nus[0] - p.nus[k] + rq(1);
			for (std::size_t j = 1; j < n; ++j)
				factor *= p.lambdas[j] - p.nus[0] + rq(1);
			RatParams rest{{p.lambdas.begin() + 1, p.lambdas.end()}, {p.nus.begin() + 1, p.nus.end()}};
			EXPECT_EQ(z_enum(m, p), factor * z_enum(m, rest));
		}
}

TEST(ZEnum, IcePointCountsConfigurations) {
	TrigComplexModel m(std::numbers::pi / 3);
	for (std::size_t n = 1; n <= 5; ++n) {
		SpectralParams<TrigComplexModel> p{std::vector<Complex>(n, Complex(1, 0)), std::vector<Complex>(n, Complex(0, 0))};
		const double expected = std::pow(std::sin(std::numbers::pi / 3), static_cast<double>(n * n)) *
		                        static_cast<double>(asm_count(n));
		EXPECT_TRUE(scalar_equal(z_enum(m, p), Complex(expected, 0)));
	}
}

TEST(ZEnum, ParallelEqualsSequential) {
	Rng rng(43);
	for (std::size_t n = 1; n <= 6; ++n) {
		RatModel m;
		auto p = draw_params(m, n, rng);
		EXPECT_EQ(z_enum(m, p, {.parallel = true}), z_enum(m, p));
		auto cm = Sampler<TrigComplexModel>::model(rng);
		auto cp = draw_params(cm, n, rng);
		EXPECT_EQ(z_enum(cm, cp, {.parallel = true}), z_enum(cm, cp, {.parallel = true}));
		EXPECT_TRUE(scalar_equal(z_enum(cm, cp, {.parallel = true}), z_enum(cm, cp)));
	}
}
