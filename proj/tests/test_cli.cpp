#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <sixvertex/cli.hpp>

using namespace sixvertex;

namespace {

namespace fs = std::filesystem;

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(const std::vector<std::string> &args) {
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
	auto dir = fs::temp_directory_path() / ("sixvertex_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
	fs::create_directories(dir);
	return dir;
}

std::string write_spec(const std::string &name, const std::string &text) {
	auto path = scratch_dir() / name;
	std::ofstream(path) << text;
	return path.string();
}

std::string sample(const std::string &name) { return std::string(SIXVERTEX_SAMPLE_SPECS) + "/" + name; }

json first_line(const std::string &s) { return json::parse(s.substr(0, s.find('\n'))); }

} // namespace

TEST(CliCompute, RationalIk) {
	auto r = run({"compute", "--spec", sample("compute_rational.json"), "--no-timing"});
	ASSERT_EQ(r.code, kExitOk) << r.err;
	auto j = json::parse(r.out);
	EXPECT_EQ(j["value"], "20");
	EXPECT_EQ(j["N"], 2);
	EXPECT_EQ(j["representation"], "ik");
	EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(CliCompute, RepresentationOverride) {
	for (const char *rep : {"kostov", "enum", "qism", "basis-rat"}) {
		auto r = run({"compute", "--spec", sample("compute_rational.json"), "-r", rep, "--no-timing"});
		ASSERT_EQ(r.code, kExitOk) << rep << ": " << r.err;
		EXPECT_EQ(json::parse(r.out)["value"], "20") << rep;
	}
	auto one = write_spec("one.json", R"({"model": "rational", "lambda": [3], "nu": ["1/2"], "representation": "enum"})");
	EXPECT_EQ(json::parse(run({"compute", "--spec", one}).out)["value"], "1");
}

TEST(CliCompute, AlgebraicAndComplexSamples) {
	auto a = run({"compute", "--spec", sample("compute_algebraic.json"), "--no-timing"});
	ASSERT_EQ(a.code, kExitOk) << a.err;
	EXPECT_EQ(json::parse(a.out)["value"], "36157891/3456");

	auto c = run({"compute", "--spec", sample("compute_complex_fw.json"), "--no-timing"});
	ASSERT_EQ(c.code, kExitOk) << c.err;
	auto v = json::parse(c.out)["value"];
	ASSERT_TRUE(v.is_array());
	auto ik = run({"compute", "--spec", sample("compute_complex_fw.json"), "-r", "ik", "--no-timing"});
	auto w = json::parse(ik.out)["value"];
	EXPECT_TRUE(scalar_equal(Complex(v[0], v[1]), Complex(w[0], w[1])));
}

TEST(CliCompute, UnsupportedRepresentationIsSpecError) {
	auto r = run({"compute", "--spec", sample("compute_rational.json"), "-r", "fw1"});
	EXPECT_EQ(r.code, kExitSpecError);
	EXPECT_FALSE(r.err.empty());
	EXPECT_EQ(run({"compute", "--spec", sample("compute_rational.json"), "-r", "nope"}).code, kExitSpecError);
}

TEST(CliCompute, SingularIsExitThree) {
	auto spec = write_spec("singular.json", R"({"model": "rational", "lambda": [0, -1], "nu": [0, 2]})");
	auto r = run({"compute", "--spec", spec});
	EXPECT_EQ(r.code, kExitSingular);
	EXPECT_NE(r.err.find("singular"), std::string::npos);
	// the oracle is defined there
	auto ok = run({"compute", "--spec", spec, "-r", "enum", "--no-timing"});
	EXPECT_EQ(ok.code, kExitOk);
	EXPECT_EQ(json::parse(ok.out)["value"], "0");
}

TEST(CliCompute, BadSpecsAreExitTwo) {
	EXPECT_EQ(run({"compute", "--spec", write_spec("broken.json", "{ not json")}).code, kExitSpecError);
	EXPECT_EQ(run({"compute", "--spec", write_spec("model.json", R"({"model": "elliptic", "lambda": [1], "nu": [0]})")})
	              .code,
	          kExitSpecError);
	EXPECT_EQ(run({"compute", "--spec", write_spec("len.json", R"({"model": "rational", "lambda": [1, 2], "nu": [0]})")})
	              .code,
	          kExitSpecError);
	EXPECT_EQ(run({"compute", "--spec", write_spec("q.json", R"({"model": "trig-algebraic", "q": 1, "u": [1], "v": [2]})")})
	              .code,
	          kExitSpecError);
	EXPECT_EQ(run({"compute"}).code, kExitSpecError);
	EXPECT_EQ(run({"compute", "--spec", "/nonexistent/spec.json"}).code, kExitSpecError);
	EXPECT_EQ(run({"frobnicate"}).code, kExitSpecError);
}

TEST(CliCompute, DeterministicWithoutTiming) {
	std::vector<std::string> args{"compute", "--spec", sample("compute_complex_fw.json"), "--no-timing"};
	EXPECT_EQ(run(args).out, run(args).out);
	std::vector<std::string> exact{"compute", "--spec", sample("compute_algebraic.json"), "--no-timing"};
	EXPECT_EQ(run(exact).out, run(exact).out);
}

TEST(CliCompute, ValueStringsRoundTrip) {
	auto r = run({"compute", "--spec", sample("compute_algebraic.json"), "--no-timing"});
	const std::string s = json::parse(r.out)["value"];
	EXPECT_EQ(Rational::parse(s).to_string(), s);
}

TEST(CliCompute, DumpStateGoesToStderr) {
	auto r = run({"compute", "--spec", sample("compute_rational.json"), "-r", "qism", "--dump-state", "--no-timing"});
	ASSERT_EQ(r.code, kExitOk);
	EXPECT_EQ(r.err, "11 20\n");
}

TEST(CliCompute, OutWritesFile) {
	auto path = (scratch_dir() / "result.json").string();
	auto r = run({"compute", "--spec", sample("compute_rational.json"), "--out", path, "--no-timing"});
	ASSERT_EQ(r.code, kExitOk);
	EXPECT_TRUE(r.out.empty());
	std::ifstream in(path);
	EXPECT_EQ(json::parse(in)["value"], "20");
}

TEST(CliVerify, SelectedCheckOnly) {
	auto r = run({"verify", "--checks", "null-vector", "--seeds", "2"});
	ASSERT_EQ(r.code, kExitOk) << r.err;
	std::istringstream lines(r.out);
	std::string line;
	std::size_t count = 0;
	while (std::getline(lines, line)) {
		auto j = json::parse(line);
		EXPECT_EQ(j["id"], "null-vector");
		EXPECT_TRUE(j["pass"].get<bool>());
		++count;
	}
	EXPECT_GT(count, 0u);
	EXPECT_NE(r.err.find("0 failed"), std::string::npos);
}

TEST(CliVerify, SpecFileAndModelFilter) {
	auto r = run({"verify", "--spec", sample("verify_null_vector.json"), "--models", "rational"});
	ASSERT_EQ(r.code, kExitOk) << r.err;
	auto j = first_line(r.out);
	EXPECT_EQ(j["model"], "rational");
	EXPECT_EQ(j["seed"], 7);
}

TEST(CliVerify, InjectedFaultFails) {
	auto r = run({"verify", "--checks", "specialization", "--models", "rational", "--n-max", "1", "--seeds", "1",
	              "--inject-fault"});
	EXPECT_EQ(r.code, kExitPropertyFailure);
	EXPECT_NE(r.out.find("\"pass\":false"), std::string::npos);
}

TEST(CliVerify, UnknownCheckIsSpecError) {
	EXPECT_EQ(run({"verify", "--checks", "bogus"}).code, kExitSpecError);
	EXPECT_EQ(run({"verify", "--models", "bogus"}).code, kExitSpecError);
}

TEST(CliEnumerate, JsonAndGrid) {
	auto r = run({"enumerate", "--n", "3"});
	ASSERT_EQ(r.code, kExitOk);
	auto j = json::parse(r.out);
	EXPECT_EQ(j["N"], 3);
	EXPECT_EQ(j["count"], 7);
	EXPECT_EQ(j["configs"].size(), 7u);

	auto g = run({"enumerate", "--n", "1", "--format", "grid"});
	ASSERT_EQ(g.code, kExitOk);
	EXPECT_NE(g.out.find('6'), std::string::npos);

	EXPECT_EQ(run({"enumerate", "--n", "9"}).code, kExitSpecError);
	EXPECT_EQ(run({"enumerate", "--n", "2", "--format", "xml"}).code, kExitSpecError);
}

TEST(CliBench, SkipsOraclesAboveCap) {
	auto r = run({"bench", "--mode", "rational", "--n-min", "6", "--n-max", "7", "--reps", "1", "--no-timing"});
	ASSERT_EQ(r.code, kExitOk) << r.err;
	auto j = json::parse(r.out);
	EXPECT_TRUE(j["consistent"].get<bool>());
	bool skipped_enum = false;
	for (const auto &row : j["rows"])
		for (const auto &e : row["entries"])
			if (row["N"] == 7 && e["representation"] == "enum")
				skipped_enum = e.value("skipped", false);
	EXPECT_TRUE(skipped_enum);
	EXPECT_EQ(r.out, run({"bench", "--mode", "rational", "--n-min", "6", "--n-max", "7", "--reps", "1", "--no-timing"}).out);
}

TEST(CliHelp, ExitsZero) {
	EXPECT_EQ(run({"--help"}).code, kExitOk);
}
