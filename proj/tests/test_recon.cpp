#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tors3/lattice.hpp"
#include "tors3/recon.hpp"

using namespace tors3;
using namespace tors3::oracles;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()), Integer(0));
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Exact Gram-Schmidt over Q, independent of the integral LLL bookkeeping.
struct RationalGs {
  std::vector<Rational> bstar2;
  std::vector<std::vector<Rational>> mu;
};

RationalGs rational_gs(const std::vector<IntVec>& b) {
  const std::size_t n = b.size(), m = b[0].size();
  std::vector<std::vector<Rational>> bs(n, std::vector<Rational>(m));
  RationalGs g;
  g.bstar2.resize(n);
  g.mu.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) bs[i][t] = b[i][t];
    for (std::size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (std::size_t t = 0; t < m; ++t) num += Rational(b[i][t]) * bs[j][t];
      g.mu[i][j] = num / g.bstar2[j];
      for (std::size_t t = 0; t < m; ++t) bs[i][t] -= g.mu[i][j] * bs[j][t];
    }
    g.bstar2[i] = 0;
    for (std::size_t t = 0; t < m; ++t) g.bstar2[i] += bs[i][t] * bs[i][t];
  }
  return g;
}

}  // namespace

TEST(Lattice, IdentityHasUnitShortestVector) {
  auto v = shortest_vector_candidate(int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(norm2(v), 1);
}

TEST(Lattice, DiagonalShortestVector) {
  auto v = shortest_vector_candidate(int_matrix({{5, 0, 0}, {0, 1, 0}, {0, 0, 7}}));
  EXPECT_EQ(abs(v[1]), 1);
  EXPECT_EQ(v[0], 0);
  EXPECT_EQ(v[2], 0);
}

TEST(Lattice, ZeroMatrixRejected) { EXPECT_THROW(shortest_vector(IntMatrix(2, 2, Integer(0))), InvariantError); }

TEST(Lattice, DependentColumnsRejected) {
  EXPECT_THROW(shortest_vector(int_matrix({{1, 2}, {2, 4}})), InvariantError);
}

TEST(Lattice, GramDeterminant) {
  EXPECT_EQ(gram_determinant(int_matrix({{2, 1}, {0, 3}})), 36);
  // columns (1,0,1), (0,1,1): Gram [[2,1],[1,2]]
  EXPECT_EQ(gram_determinant(int_matrix({{1, 0}, {0, 1}, {1, 1}})), 3);
}

TEST(Lattice, LllOutputIsReducedAndEquivalent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(-50, 50);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 5;
    std::vector<IntVec> b(n, IntVec(n));
    for (auto& v : b)
      for (auto& e : v) e = small(rng);
    b[0][0] += Integer("1000000000000000000000000");  // force work
    IntMatrix before(n, n, Integer(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) before(j, i) = b[i][j];
    const Integer det2 = gram_determinant(before);
    if (det2 == 0) continue;
    auto r = b;
    lll_reduce(r);
    IntMatrix after(n, n, Integer(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) after(j, i) = r[i][j];
    EXPECT_EQ(gram_determinant(after), det2);
    auto g = rational_gs(r);
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < i; ++j) EXPECT_LE(abs(g.mu[i][j]), Rational(1, 2));
      EXPECT_GE(g.bstar2[i], (Rational(99, 100) - g.mu[i][i - 1] * g.mu[i][i - 1]) * g.bstar2[i - 1]);
    }
    // every reduced vector is an integer combination of the input
    for (const auto& v : r) {
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = b[j][i];
        a[i][n] = v[i];
      }
      for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        for (int i = 0; i < n; ++i) {
          if (i == c || a[i][c] == 0) continue;
          Rational f = a[i][c] / a[c][c];
          for (int k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
        }
      }
      for (int i = 0; i < n; ++i) EXPECT_TRUE(is_integer(a[i][n] / a[i][i]));
    }
  }
}

TEST(Lattice, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int t = 0; t < 30; ++t) {
    std::vector<IntVec> cols(3, IntVec(3));
    for (auto& v : cols)
      for (auto& x : v) x = e(rng);
    IntMatrix m(3, 3, Integer(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(j, i) = cols[i][j];
    if (gram_determinant(m) == 0) continue;
    Integer best = -1;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b)
        for (long c = -12; c <= 12; ++c) {
          if (!a && !b && !c) continue;
          IntVec v(3);
          for (int j = 0; j < 3; ++j) v[j] = a * cols[0][j] + b * cols[1][j] + c * cols[2][j];
          Integer n = norm2(v);
          if (best < 0 || n < best) best = n;
        }
    EXPECT_EQ(shortest_vector(m).norm2, best) << t;
  }
}

TEST(MinpolyLattice, ThetaOneRealVariant) {
  auto lp = build_minpoly_lattice(BigComplex(Complex(1, 0), 50), 1, 2);
  EXPECT_FALSE(lp.complex_variant);
  EXPECT_TRUE(lp.basis == int_matrix({{1, 0}, {100, 100}}));
}

TEST(MinpolyLattice, SqrtTwoBottomRow) {
  const int k = 50, kp = 40;
  BigComplex theta(sqrt(BigReal::from_long(2, k)), BigReal(k));
  auto lp = build_minpoly_lattice(theta, 2, kp);
  ASSERT_EQ(lp.basis.rows(), 3);
  const Integer c = Integer(1) * Integer("10000000000000000000000000000000000000000");
  EXPECT_EQ(lp.basis(2, 0), 2 * c);
  EXPECT_EQ(lp.basis(2, 1), Integer("14142135623730950488016887242096980785696"));
  EXPECT_EQ(lp.basis(2, 2), c);
  EXPECT_EQ(lp.basis(0, 0), 1);
  EXPECT_EQ(lp.basis(1, 1), 1);
}

TEST(MinpolyLattice, ImaginaryUnitComplexVariant) {
  const int k = 50, kp = 40;
  BigComplex i(BigReal(k), BigReal::from_long(1, k));
  auto lp = build_minpoly_lattice(i, 2, kp);
  ASSERT_TRUE(lp.complex_variant);
  ASSERT_EQ(lp.basis.rows(), 4);
  const Integer c("10000000000000000000000000000000000000000");
  EXPECT_EQ(lp.basis(2, 0), -c);
  EXPECT_EQ(lp.basis(2, 1), 0);
  EXPECT_EQ(lp.basis(2, 2), c);
  EXPECT_EQ(lp.basis(3, 0), 0);
  EXPECT_EQ(lp.basis(3, 1), c);
  EXPECT_EQ(lp.basis(3, 2), 0);
}

TEST(MinpolyLattice, ScalingMustStayBelowPrecision) {
  EXPECT_THROW(build_minpoly_lattice(BigComplex(Complex(1, 0), 50), 1, 50), PrecisionError);
}

TEST(MinpolyLattice, SqrtTwoCandidateAnnihilates) {
  const int k = 50;
  BigComplex theta(sqrt(BigReal::from_long(2, k)), BigReal(k));
  auto lp = build_minpoly_lattice(theta, 2, 40);
  auto x = detail::relation_coefficients(lp, shortest_vector_candidate(lp.basis));
  if (x[0] < 0)
    for (auto& e : x) e = -e;
  EXPECT_EQ(x, (IntVec{1, 0, -2}));
}

TEST(FindMinpoly, Rational) {
  const int k = 100;
  BigComplex theta(BigReal(Rational(3, 7), k), BigReal(k));
  auto r = find_minpoly(theta, 8, k, k - 50);
  EXPECT_EQ(r.polynomial, integer_poly({-3, 7}));
}

TEST(FindMinpoly, PublishedPolynomialsRoundTrip) {
  for (const auto& m : {std::vector<std::string>{"12", "0", "-8", "0", "4", "0", "1"},
                        std::vector<std::string>{"324", "-576", "256", "24", "4", "-6", "1"},
                        std::vector<std::string>{"-1323", "0", "-648", "0", "-126", "0", "0", "0", "1"},
                        std::vector<std::string>{"2439", "-3381", "2296", "-861", "184", "-21", "1"}}) {
    UniPoly f = from_strings(m);
    auto r = find_minpoly(some_root(f, 300), 8, 300, 250);
    EXPECT_TRUE(same_up_to_sign(r.polynomial, f)) << r.polynomial.to_string();
  }
}

TEST(FindMinpoly, NoCandidateBeyondDmax) {
  UniPoly f = from_strings({"-1323", "0", "-648", "0", "-126", "0", "0", "0", "1"});
  EXPECT_THROW(find_minpoly(some_root(f, 300), 4, 300, 250), NoCandidateError);
}

TEST(FindMinpoly, RandomIrreducibleRoundTripAndNormBound) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const int degree = 1 + t % 8;
    auto c = random_irreducible(rng, degree);
    UniPoly f = integer_poly(c);
    auto r = find_minpoly(some_root(f, 300), 8, 300, 250);
    ASSERT_TRUE(same_up_to_sign(r.polynomial, f)) << f.to_string() << " got " << r.polynomial.to_string();
    Integer cinf2 = 0;
    for (long x : c) cinf2 += Integer(x) * x;
    // |c_k|^2 <= 2 |c_inf|^4
    EXPECT_LE(norm2(r.lattice_vector), 2 * cinf2 * cinf2) << f.to_string();
  }
}

TEST(FindMinpoly, RaisingPrecisionKeepsAcceptance) {
  for (const auto& m : {std::vector<std::string>{"12", "0", "-8", "0", "4", "0", "1"},
                        std::vector<std::string>{"2439", "-3381", "2296", "-861", "184", "-21", "1"}}) {
    UniPoly f = from_strings(m);
    const BigComplex root = some_root(f, 500);
    for (int k : {300, 400, 500}) {
      auto r = find_minpoly(root, 8, k, 250);
      EXPECT_TRUE(same_up_to_sign(r.polynomial, f)) << k;
    }
  }
}

TEST(FindRelation, PublishedOrbitOne) {
  UniPoly f = from_strings({"12", "0", "-8", "0", "4", "0", "1"});
  const int k = 300;
  const BigComplex u = some_root(f, k + 20);
  const BigComplex one(Complex(1, 0), k + 20);
  auto a2 = find_relation(u, u + one, 6, k, 250);
  EXPECT_EQ(a2.den, 1);
  EXPECT_EQ(a2.coeffs, (std::vector<Integer>{1, 1, 0, 0, 0, 0}));
  // (-1/3)(u^5 + u^3 + u - 6)
  BigComplex beta = pow(u, 5) + pow(u, 3) + u - BigComplex(Complex(6, 0), k + 20);
  beta = BigComplex(Rational(-1, 3), k + 20) * beta;
  auto a5 = find_relation(u, beta, 6, k, 250);
  EXPECT_EQ(a5.den, 3);
  EXPECT_EQ(a5.coeffs, (std::vector<Integer>{6, -1, 0, -1, 0, -1}));
  EXPECT_GT(a5.quality, k - 250 - 10);
}

TEST(FindRelation, RationalTarget) {
  const int k = 100;
  BigComplex theta(sqrt(BigReal::from_long(2, k)), BigReal(k));
  auto r = find_relation(theta, BigComplex(Complex(5, 0), k), 2, k, 50);
  EXPECT_EQ(r.den, 1);
  EXPECT_EQ(r.coeffs, (std::vector<Integer>{5, 0}));
}

TEST(FindRelation, NoneOutsideTheField) {
  const int k = 100;
  BigComplex theta(sqrt(BigReal::from_long(2, k)), BigReal(k));
  BigComplex beta(sqrt(BigReal::from_long(3, k)), BigReal(k));
  EXPECT_THROW(find_relation(theta, beta, 2, k, 50), NoCandidateError);
}

TEST(SelectRoot, RealRoots) {
  const int k = 50;
  BigComplex a(-sqrt(BigReal::from_long(2, k)), BigReal(k));
  auto m = select_root_numeric(integer_poly({-2, 0, 1}), a);
  EXPECT_LT((m.root - a).log10_abs(), -45);
  EXPECT_LT(m.root.re.to_double(), 0);
}

TEST(SelectRoot, NearImaginaryUnit) {
  BigComplex a(Complex(0, 0.9999), 50);
  EXPECT_THROW(select_root_numeric(integer_poly({1, 0, 1}), a), PrecisionError);
  auto m = select_root_numeric(integer_poly({1, 0, 1}), a, -3);
  EXPECT_NEAR(m.root.im.to_double(), 1.0, 1e-40);
  EXPECT_NEAR(m.root.re.to_double(), 0.0, 1e-40);
}

TEST(SelectRoot, OrbitThreeAlphaOne) {
  auto ts = build_torsion_scheme(fixtures::j040());
  auto pts = fixtures::orbit_points(ts, fixtures::j040_orbits()[2], 300);
  UniPoly f = fixtures::to_orbit(fixtures::j040_orbits()[2]).minpoly;
  for (const auto& p : pts) {
    auto m = select_root_numeric(f, p.coords[0]);
    EXPECT_LT(m.gap_log10, -50);
  }
}

TEST(Reconstruct, PublishedJ040Orbits) {
  auto ts = build_torsion_scheme(fixtures::j040());
  std::vector<NumericSolution> sols;
  for (int o : {2, 0}) {
    auto pts = fixtures::orbit_points(ts, fixtures::j040_orbits()[o], 300);
    sols.insert(sols.end(), pts.begin(), pts.end());
  }
  ReconConfig cfg;
  cfg.digits = 300;
  auto rec = reconstruct_orbits(sols, cfg);
  EXPECT_TRUE(rec.unresolved.empty());
  ASSERT_EQ(rec.orbits.size(), 2u);
  // sorted by degree: orbit 1 (degree 6) first
  for (int i = 0; i < 2; ++i) {
    const auto want = fixtures::to_orbit(fixtures::j040_orbits()[i == 0 ? 0 : 2]);
    const auto& got = rec.orbits[i];
    EXPECT_EQ(got.minpoly, want.minpoly);
    EXPECT_TRUE(got.consistent);
    EXPECT_EQ(static_cast<int>(got.size()), want.degree());
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(got.relations[j]->den, want.relations[j]->den) << i << " a" << j + 2;
      EXPECT_EQ(got.relations[j]->coeffs, want.relations[j]->coeffs) << i << " a" << j + 2;
    }
  }
}

TEST(Reconstruct, IncompleteOrbitIsFlagged) {
  auto ts = build_torsion_scheme(fixtures::j040());
  auto pts = fixtures::orbit_points(ts, fixtures::j040_orbits()[0], 300);
  pts.pop_back();
  ReconConfig cfg;
  cfg.digits = 300;
  auto rec = reconstruct_orbits(pts, cfg);
  ASSERT_EQ(rec.orbits.size(), 1u);
  EXPECT_FALSE(rec.orbits[0].consistent);
  EXPECT_EQ(rec.orbits[0].size(), 5u);
}
