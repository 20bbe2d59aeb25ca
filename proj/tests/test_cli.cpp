#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "tors3/cli.hpp"
#include "tors3/io.hpp"

using namespace tors3;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tors3");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("tors3_test_" + name);
  io::write_text(p.string(), text);
  return p.string();
}

}  // namespace

TEST(Io, CurveRoundTrip) {
  auto c = fixtures::j030();
  auto back = io::curve_from_json(io::to_json(c));
  EXPECT_EQ(back.leading_first(), c.leading_first());
  EXPECT_EQ(back.label(), "J0(30)");
  auto j = io::Json::parse(R"({"degree": 7, "coeffs": ["1","0","0","0","0","0","1/2","1"]})");
  EXPECT_EQ(io::curve_from_json(j).a(1), Rational(1, 2));
  j["degree"] = 8;
  EXPECT_THROW(io::curve_from_json(j), InvariantError);
}

TEST(Io, SolutionRoundTripIsExact) {
  auto ts = build_torsion_scheme(fixtures::j040());
  auto pts = fixtures::orbit_points(ts, fixtures::j040_orbits()[0], 120);
  for (auto& p : pts) p.precision = 120;
  auto j = io::solutions_to_json(pts, count_statuses(pts));
  EXPECT_EQ(j["counts"]["converged"], 6);
  auto back = io::solutions_from_json(io::Json::parse(j.dump()));
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < kSchemeVars; ++k) {
      EXPECT_EQ(back[i].coords[k].re.to_string(), pts[i].coords[k].re.to_string());
      EXPECT_EQ(back[i].coords[k].im.to_string(), pts[i].coords[k].im.to_string());
    }
}

TEST(Io, OrbitRoundTrip) {
  for (const auto& o : fixtures::j030_orbits()) {
    auto t = fixtures::to_orbit(o);
    t.members = {3, 1};
    auto j = io::to_json(t);
    auto back = io::orbit_from_json(io::Json::parse(j.dump()));
    EXPECT_EQ(back.minpoly, t.minpoly);
    EXPECT_EQ(back.members, t.members);
    for (int r = 0; r < 5; ++r) {
      EXPECT_EQ(back.relations[r]->den, t.relations[r]->den);
      EXPECT_EQ(back.relations[r]->coeffs, t.relations[r]->coeffs);
    }
  }
}

TEST(Io, MalformedSolutionsRejected) {
  EXPECT_THROW(io::solutions_from_json(io::Json::parse(R"({"solutions": [{"status": "converged"}]})")),
               InvariantError);
  EXPECT_THROW(io::solutions_from_json(io::Json::parse(
                   R"([{"status": "odd", "precision": 20, "residual_exp": null, "coords": []}])")),
               InvariantError);
}

TEST(Cli, ConductorPrintsFive) {
  auto in = temp_file("ram.json", R"({"groups":[{"order":24,"fixed_dim":2},{"order":8,"fixed_dim":4},)"
                                  R"({"order":2,"fixed_dim":4},{"order":2,"fixed_dim":4}]})");
  auto r = run({"conductor", "--in", in});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, ConductorWithGeneratorsAndFractions) {
  auto in = temp_file("ram2.json", R"({"groups":[{"order":6,"fixed_dim":3},{"order":2,"generators":)"
                                   R"([[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,2,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]]}]})");
  auto r = run({"conductor", "--in", in});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "10/3\n");
}

TEST(Cli, ConductorDiagnostics) {
  auto bad = temp_file("ram3.json", R"({"groups":[{"order":24,"fixed_dim":2},{"order":5,"fixed_dim":4}]})");
  auto r = run({"conductor", "--in", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a subgroup chain"), std::string::npos);
  auto broken = temp_file("ram4.json", "{\"groups\": [");
  r = run({"conductor", "--in", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
}

TEST(Cli, SchemeIsDeterministic) {
  auto curve = temp_file("j040.json", io::dump(io::to_json(fixtures::j040())));
  auto a = run({"scheme", "--curve", curve});
  auto b = run({"scheme", "--curve", curve});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = io::Json::parse(a.out);
  EXPECT_EQ(j["parity"], "even");
  ASSERT_EQ(j["equations"].size(), 10u);
  auto ts = build_torsion_scheme(fixtures::j040());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(io::multipoly_from_json(j["equations"][i], kSchemeVars), ts.equation(i));
}

TEST(Cli, RejectsInvalidInputs) {
  auto nonmonic = temp_file("bad.json", R"({"degree": 7, "coeffs": ["2","0","0","0","0","0","1","1"]})");
  auto r = run({"scheme", "--curve", nonmonic});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("monic"), std::string::npos);
  auto curve = temp_file("odd.json", io::dump(io::to_json(fixtures::odd_curve())));
  r = run({"solve", "--curve", curve, "--sample", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("sample"), std::string::npos);
  r = run({"pipeline", "--curve", curve, "--digits", "50"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("digits must be >= 100"), std::string::npos);
  EXPECT_NE(run({}).code, 0);
}

TEST(Cli, SolveReconstructVerifyChain) {
  // A handful of paths is enough to exercise every stage; the census then
  // reports a deficit, so verify exits 1.
  auto curve = temp_file("odd2.json", io::dump(io::to_json(fixtures::odd_curve())));
  const auto sols = (fs::temp_directory_path() / "tors3_test_sols.json").string();
  auto r = run({"solve", "--curve", curve, "--sample", "0.01", "--seed", "7", "--digits", "120", "--out", sols});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = io::read_file(sols);
  ASSERT_GT(j["solutions"].size(), 0u);
  r = run({"refine", "--curve", curve, "--in", sols, "--digits", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::Json::parse(r.out)["solutions"][0]["precision"], 200);
  r = run({"verify", "--curve", curve, "--in", sols, "--digits", "120"});
  EXPECT_EQ(r.code, 1) << r.err;
  auto rep = io::Json::parse(r.out);
  EXPECT_TRUE(rep["residuals"]["pass"].get<bool>());
  EXPECT_FALSE(rep["census"]["total_matches"].get<bool>());
  EXPECT_TRUE(rep["census"]["sums_consistent"].get<bool>());
}
