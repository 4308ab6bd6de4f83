#include <gtest/gtest.h>

#include <sixvertex/verify.hpp>

using namespace sixvertex;

namespace {

using RatModel = RationalModel<Rational>;
using AlgModel = TrigAlgebraicModel<Rational>;
using RatParams = SpectralParams<RatModel>;

Rational rq(long p, long q = 1) { return Rational(p, q); }

template <WeightModel M>
void expect_all_pass(std::size_t n_max) {
	for (std::size_t n = 1; n <= n_max; ++n)
		for (std::uint64_t seed = 0; seed < 3; ++seed) {
			Rng rng(seed);
			const M model = Sampler<M>::model(rng);
			const auto impls = z_implementations<M>(seed);
			for (const auto &z : impls) {
				std::vector<PropertyReport> reports{check_symmetry(z, model, n, seed)};
				if constexpr (scalar_traits<typename M::scalar_type>::exact)
					reports.push_back(check_degree(z, model, n, seed));
				if (z.at_vanishing)
					reports.push_back(check_vanishing(z, model, n, seed));
				if (z.at_specialization)
					reports.push_back(check_specialization(z, model, n, seed));
				for (const auto &r : reports)
					EXPECT_TRUE(r.pass) << r.to_json().dump();
			}
			EXPECT_TRUE(check_agreement(impls, model, n, seed).pass);
		}
}

} // namespace

TEST(Draws, Deterministic) {
	RatModel m;
	Rng a(5), b(5);
	auto pa = draw_params(m, 4, a);
	auto pb = draw_params(m, 4, b);
	EXPECT_EQ(pa.lambdas, pb.lambdas);
	EXPECT_EQ(pa.nus, pb.nus);
	EXPECT_TRUE(is_generic(m, pa));
	Rng c(6);
	for (int t = 0; t < 200; ++t) {
		auto r = draw_rational(c);
		EXPECT_LE(r.to_double(), 20.0);
		EXPECT_GE(r.to_double(), -20.0);
	}
}

TEST(Draws, GenericityRejectsDegeneratePoints) {
	RatModel m;
	EXPECT_FALSE(is_generic(m, RatParams{{rq(0), rq(1)}, {rq(0), rq(3)}}));
	EXPECT_FALSE(is_generic(m, RatParams{{rq(1), rq(1)}, {rq(5), rq(3)}}));
	EXPECT_TRUE(is_generic(m, RatParams{{rq(2), rq(5)}, {rq(0), rq(1)}}));
}

TEST(Checks, RationalImplementationsPass) { expect_all_pass<RatModel>(4); }

TEST(Checks, AlgebraicImplementationsPass) { expect_all_pass<AlgModel>(3); }

TEST(Checks, ComplexImplementationsPass) { expect_all_pass<TrigComplexModel>(5); }

TEST(Checks, BrokenImplementationsFail) {
	RatModel m;
	ZImpl<RatModel> doubled{"doubled", [](const RatModel &mm, const RatParams &p) { return rq(2) * z_enum(mm, p); }};
	EXPECT_FALSE(check_specialization(doubled, m, 2, 0).pass);

	ZImpl<RatModel> lopsided{"lopsided",
	                         [](const RatModel &mm, const RatParams &p) { return z_enum(mm, p) + p.lambdas[0]; }};
	EXPECT_FALSE(check_symmetry(lopsided, m, 2, 0).pass);

	ZImpl<RatModel> high{"high", [](const RatModel &mm, const RatParams &p) {
		                     Rational extra(1);
		                     for (const auto &l : p.lambdas)
			                     extra *= l * l * l;
		                     return z_enum(mm, p) + extra;
	                     }};
	EXPECT_FALSE(check_degree(high, m, 2, 0).pass);

	ZImpl<RatModel> shifted{"shifted", [](const RatModel &mm, const RatParams &p) { return z_enum(mm, p) + rq(1); }};
	auto r = check_vanishing(shifted, m, 2, 0);
	EXPECT_FALSE(r.pass);
	EXPECT_TRUE(r.witness.contains("params"));
}

TEST(Checks, ExceptionsBecomeFailures) {
	RatModel m;
	ZImpl<RatModel> throwing{"throwing", [](const RatModel &, const RatParams &) -> Rational {
		                         throw SingularConfiguration("boom");
	                         }};
	auto r = check_symmetry(throwing, m, 2, 0);
	EXPECT_FALSE(r.pass);
	EXPECT_EQ(r.witness["exception"], "boom");
}

TEST(Specialization, ClosedProducts) {
	EXPECT_EQ(specialization_value(RatModel{}, std::vector<Rational>{rq(0), rq(2)}), rq(-3));
	AlgModel am(rq(2));
	std::vector<AlgebraicPoint<Rational>> one{AlgebraicPoint<Rational>::from_root(rq(7))};
	EXPECT_EQ(specialization_value(am, one), rq(3, 2));
	TrigComplexModel cm(0.5);
	EXPECT_NEAR(std::abs(specialization_value(cm, {Complex(0.2, 0)}) - std::sin(0.5)), 0.0, 1e-15);
}

TEST(Uniqueness, ReconstructionMatchesExamples) {
	RatModel m;
	EXPECT_EQ(reconstruct_from_properties(m, {rq(2), rq(5)}, {rq(0), rq(1)}), rq(20));
	EXPECT_EQ(reconstruct_from_properties(m, {rq(2), rq(5)}, {rq(0), rq(2)}),
	          z_enum(m, RatParams{{rq(2), rq(5)}, {rq(0), rq(2)}}));
	EXPECT_EQ(reconstruct_from_properties(m, {rq(3)}, {rq(-1)}), rq(1));
	AlgModel am(rq(3));
	EXPECT_EQ(reconstruct_from_properties(am, {AlgebraicPoint<Rational>::from_root(rq(2))},
	                                      {AlgebraicPoint<Rational>::from_root(rq(5))}),
	          rq(8, 3));
}

TEST(Uniqueness, PassesAndDetectsFault) {
	for (std::size_t n = 1; n <= 3; ++n) {
		EXPECT_TRUE(check_uniqueness(RatModel{}, n, 11).pass);
		Rng rng(12);
		EXPECT_TRUE(check_uniqueness(Sampler<AlgModel>::model(rng), n, 12).pass);
	}
	// Z is even in c at even N, so the flipped sign only shows at odd N
	EXPECT_TRUE(check_uniqueness(RatModel{}, 2, 11, true).pass);
	EXPECT_FALSE(check_uniqueness(RatModel{}, 3, 11, true).pass);
}

TEST(QismLemmas, AllPass) {
	for (const auto &id : qism_lemma_ids())
		for (std::size_t n = 1; n <= 3; ++n)
			for (std::uint64_t seed = 0; seed < 3; ++seed) {
				Rng rng(seed);
				auto r = check_qism_lemma(id, RatModel{}, n, seed);
				EXPECT_TRUE(r.pass) << r.to_json().dump();
				auto c = check_qism_lemma(id, Sampler<TrigComplexModel>::model(rng), n, seed);
				EXPECT_TRUE(c.pass) << c.to_json().dump();
			}
	EXPECT_FALSE(check_qism_lemma("no-such-lemma", RatModel{}, 2, 0).pass);
}

TEST(Reports, JsonShape) {
	auto r = check_symmetry(z_implementations<RatModel>(0).front(), RatModel{}, 2, 7);
	auto j = r.to_json();
	std::vector<std::string> keys;
	for (auto it = j.begin(); it != j.end(); ++it)
		keys.push_back(it.key());
	EXPECT_EQ(keys, (std::vector<std::string>{"id", "model", "n", "seed", "pass", "witness"}));
	EXPECT_EQ(j["id"], "symmetry/enum");
	EXPECT_EQ(j["model"], "rational");
	EXPECT_EQ(j["seed"], 7);
}

TEST(Matrix, InjectedFaultIsCaught) {
	VerifyConfig cfg;
	cfg.n_max = 2;
	cfg.complex_n_max = 2;
	cfg.lemma_n_max = 2;
	cfg.flip_n_max = 2;
	cfg.uniqueness_n_max = 2;
	cfg.seeds = 2;
	std::size_t total = 0, failed = 0;
	run_all_properties(cfg, [&](const PropertyReport &r) { ++total, failed += !r.pass; });
	EXPECT_GT(total, 0u);
	EXPECT_EQ(failed, 0u);

	cfg.inject_fault = true;
	failed = 0;
	run_all_properties(cfg, [&](const PropertyReport &r) { failed += !r.pass; });
	EXPECT_GT(failed, 0u);
}

TEST(Matrix, FiltersByCheckAndModel) {
	VerifyConfig cfg;
	cfg.checks = {"null-vector"};
	cfg.models = {ModelKind::rational};
	cfg.seeds = 2;
	std::set<std::string> ids;
	std::set<std::string> models;
	run_all_properties(cfg, [&](const PropertyReport &r) {
		ids.insert(r.id);
		models.insert(r.model);
	});
	EXPECT_EQ(ids, std::set<std::string>{"null-vector"});
	EXPECT_EQ(models, std::set<std::string>{"rational"});
}
