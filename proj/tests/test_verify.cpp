#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tors3/verify.hpp"

using namespace tors3;

namespace {

// Independent prime search: smallest p > 3 with a root of the minimal
// polynomial and none of the excluded divisibilities.
long first_prime_with_root(const TorsionScheme& ts, const fixtures::OrbitData& o) {
  auto t = fixtures::to_orbit(o);
  Integer disc = ts.curve.discriminant_resultant().get_num();
  for (long p = 5;; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2) prime = prime && p % d;
    if (!prime) continue;
    bool bad = disc % p == 0;
    for (const auto& r : t.relations) bad = bad || r->den % p == 0;
    bad = bad || t.minpoly.coeff(0).get_num() % p == 0 || t.minpoly.leading().get_num() % p == 0;
    if (bad) continue;
    for (long x = 0; x < p; ++x) {
      Integer v = 0;
      for (int i = t.minpoly.degree(); i >= 0; --i) v = v * x + t.minpoly.coeff(i).get_num();
      if (v % p == 0) return p;
    }
  }
}

NumericSolution point(std::initializer_list<double> re) {
  NumericSolution s;
  for (double v : re) s.coords.emplace_back(Complex(v, 0.5 * v), 40);
  while (s.coords.size() < 10) s.coords.emplace_back(Complex(0.25, 0), 40);
  s.status = PathStatus::kConverged;
  return s;
}

}  // namespace

TEST(ModularCheck, PublishedJ040OrbitsPassAtThreePrimes) {
  auto ts = build_torsion_scheme(fixtures::j040());
  for (const auto& o : fixtures::j040_orbits()) {
    auto checks = multi_prime_check(ts, fixtures::to_orbit(o), 3);
    int passed = 0;
    for (const auto& c : checks) {
      EXPECT_NE(c.outcome, CheckOutcome::kFail) << o.name << " p=" << c.prime << " " << c.detail;
      passed += c.pass();
      EXPECT_GT(c.roots_tested, 0);
    }
    EXPECT_EQ(passed, 3) << o.name;
  }
}

TEST(ModularCheck, PublishedJ030OrbitsPassAtThreePrimes) {
  auto ts = build_torsion_scheme(fixtures::j030());
  for (const auto& o : fixtures::j030_orbits()) {
    auto checks = multi_prime_check(ts, fixtures::to_orbit(o), 3);
    int passed = 0;
    for (const auto& c : checks) passed += c.pass();
    EXPECT_EQ(passed, 3) << o.name;
  }
}

TEST(ModularCheck, SmallestAdmissiblePrime) {
  auto ts = build_torsion_scheme(fixtures::j040());
  const auto o = fixtures::j040_orbits()[2];
  const long p = first_prime_with_root(ts, o);
  auto primes = admissible_primes(ts, fixtures::to_orbit(o), 1);
  ASSERT_EQ(primes.size(), 1u);
  EXPECT_EQ(primes[0], p);
  EXPECT_TRUE(modular_point_check(ts, fixtures::to_orbit(o), p).pass());
}

TEST(ModularCheck, CorruptedRelationFails) {
  auto ts = build_torsion_scheme(fixtures::j040());
  const auto o = fixtures::j040_orbits()[2];
  auto orbit = fixtures::to_orbit(o);
  orbit.relations[2]->coeffs[0] = 4;  // a4 = 4 instead of 3
  const long p = first_prime_with_root(ts, o);
  auto c = modular_point_check(ts, orbit, p);
  EXPECT_EQ(c.outcome, CheckOutcome::kFail);
}

TEST(ModularCheck, InadmissiblePrimeRejected) {
  auto ts = build_torsion_scheme(fixtures::j040());
  auto orbit = fixtures::to_orbit(fixtures::j040_orbits()[2]);
  EXPECT_THROW(modular_point_check(ts, orbit, 3), InvariantError);
  EXPECT_THROW(modular_point_check(ts, orbit, 7), InvariantError);  // divides 189
}

TEST(ModularCheck, AgreesWithHighPrecisionPoints) {
  // The exact points built numerically from the same data vanish on the
  // scheme to working precision.
  auto ts = build_torsion_scheme(fixtures::j030());
  for (const auto& o : fixtures::j030_orbits()) {
    auto r = residual_report(ts, fixtures::orbit_points(ts, o, 200), 150);
    EXPECT_TRUE(r.pass) << o.name;
  }
}

TEST(Residuals, PublishedPointsAt1000Digits) {
  auto ts = build_torsion_scheme(fixtures::j040());
  auto pts = fixtures::orbit_points(ts, fixtures::j040_orbits()[0], 1000);
  auto r = residual_report(ts, pts, 900);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.residual_exps.size(), 6u);

  auto bad = pts;
  bad[0].coords[3].re += pow10(-10, 1000);
  EXPECT_FALSE(residual_report(ts, bad, 900).pass);
}

TEST(Residuals, ZeroTupleFails) {
  auto ts = build_torsion_scheme(fixtures::j040());
  NumericSolution z;
  z.coords.assign(10, BigComplex(100));
  z.status = PathStatus::kConverged;
  auto r = residual_report(ts, {z}, 50);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.residual_exps[0], std::log10(18.0), 1e-12);  // x^1 equation constant
}

TEST(Census, EmptyIsFlagged) {
  auto c = census({}, Reconstruction{});
  EXPECT_EQ(c.total, 0u);
  EXPECT_FALSE(c.total_matches());
  EXPECT_FALSE(c.pass());
}

TEST(Census, SumsOrbitsAndUnresolved) {
  auto ts = build_torsion_scheme(fixtures::j040());
  std::vector<NumericSolution> sols;
  for (int o : {0, 2}) {
    auto p = fixtures::orbit_points(ts, fixtures::j040_orbits()[o], 300);
    sols.insert(sols.end(), p.begin(), p.end());
  }
  ReconConfig cfg;
  cfg.digits = 300;
  auto rec = reconstruct_orbits(sols, cfg);
  auto c = census(sols, rec);
  EXPECT_EQ(c.total, 14u);
  EXPECT_EQ(c.orbit_sizes, (std::vector<std::size_t>{6, 8}));
  EXPECT_TRUE(c.sums_consistent());
  EXPECT_FALSE(c.total_matches());
}

TEST(Negation, ClosedSetPasses) {
  std::vector<NumericSolution> s = {point({1, 2, 3, 4, 5, 6}), point({1, -2, -3, -4, -5, -6}),
                                    point({7, 0, 1, 0, 2, 0}), point({7, 0, -1, 0, -2, 0})};
  EXPECT_TRUE(negation_closure_check(s, Parity::kOdd, 20).pass);
  s.erase(s.begin() + 1);
  auto r = negation_closure_check(s, Parity::kOdd, 20);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.unmatched, (std::vector<std::size_t>{0}));
}

TEST(Negation, EmptyAndEvenParity) {
  EXPECT_TRUE(negation_closure_check({}, Parity::kOdd, 20).pass);
  EXPECT_THROW(negation_closure_check({}, Parity::kEven, 20), InvariantError);
}

TEST(Negation, IgnoresNonConverged) {
  std::vector<NumericSolution> s = {point({1, 2, 3, 4, 5, 6})};
  s[0].status = PathStatus::kDiverged;
  EXPECT_TRUE(negation_closure_check(s, Parity::kOdd, 20).pass);
}
