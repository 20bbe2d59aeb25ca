#pragma once

// Exact algebraic data from high-precision approximations.
//
// An integer relation x_0 q_0 + ... + x_{m-1} q_{m-1} + x_m = 0 among
// approximations q_j is found as a short vector of the lattice spanned by
// the columns of
//
//   [ I_m                      0   ]
//   [ [C Re q_0] .. [C Re q_{m-1}]  [C] ]
//   [ [C Im q_0] .. [C Im q_{m-1}]   0  ]   (complex variant only)
//
// with C = 10^k'. The top block carries x_0..x_{m-1} unchanged and x_m is
// recovered from the bottom entry. A candidate is accepted when it is far
// shorter than det(L)^(1/(m+1)) and the relation holds to the available
// precision.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tors3/big.hpp"
#include "tors3/error.hpp"
#include "tors3/lattice.hpp"
#include "tors3/solver.hpp"
#include "tors3/unipoly.hpp"

namespace tors3 {

/// Log10 margin below det(L)^(1/n) a candidate must reach (factor 1/1000).
inline constexpr double kHermiteMargin = 3.0;

struct LatticeProblem {
  std::vector<BigComplex> targets;  // q_0..q_{m-1}
  int degree = 0;                   // m
  int kprime = 0;
  int digits = 0;
  bool complex_variant = false;
  IntMatrix basis;
};

namespace detail {

/// True when |Im z| < 10^(-k/2), i.e. z is taken to be real.
inline bool effectively_real(const BigComplex& z, int k) { return z.im.log10_abs() < -0.5 * k; }

inline LatticeProblem relation_lattice(std::vector<BigComplex> q, int k, int kprime, bool complex_variant) {
  if (kprime >= k) throw PrecisionError("scaling exceeds precision");
  const int m = static_cast<int>(q.size());
  LatticeProblem lp;
  lp.degree = m;
  lp.kprime = kprime;
  lp.digits = k;
  lp.complex_variant = complex_variant;
  const int work = k + 20;
  const BigReal c = pow10(kprime, work);
  lp.basis = IntMatrix(m + (complex_variant ? 2 : 1), m + 1, Integer(0));
  for (int j = 0; j < m; ++j) {
    lp.basis(j, j) = 1;
    lp.basis(m, j) = floor_int(c * q[j].re.with_digits(work));
    if (complex_variant) lp.basis(m + 1, j) = floor_int(c * q[j].im.with_digits(work));
  }
  lp.basis(m, m) = floor_int(c);
  lp.targets = std::move(q);
  return lp;
}

/// Integer coefficients x_0..x_m of a lattice vector.
inline IntVec relation_coefficients(const LatticeProblem& lp, const IntVec& v) {
  const int m = lp.degree;
  IntVec x(v.begin(), v.begin() + m);
  Integer rest = v[m];
  for (int j = 0; j < m; ++j) rest -= x[j] * lp.basis(m, j);
  Integer xm;
  mpz_divexact(xm.get_mpz_t(), rest.get_mpz_t(), lp.basis(m, m).get_mpz_t());
  x.push_back(xm);
  return x;
}

/// log10 det(L)^(1/n) for the column lattice.
inline double hermite_scale(const LatticeProblem& lp) {
  return 0.5 * log10_integer(gram_determinant(lp.basis)) / lp.basis.cols();
}

/// -log10 |x_0 q_0 + ... + x_m| at full precision.
inline double relation_quality(const std::vector<BigComplex>& q, const IntVec& x, int k) {
  const int work = k + 20;
  BigComplex s(BigReal(x.back(), work), BigReal(work));
  for (std::size_t j = 0; j < q.size(); ++j) {
    BigReal xj(x[j], work);
    s += xj * q[j].with_digits(work);
  }
  return -s.log10_abs();
}

/// Quality a genuine relation reaches at k digits: the rounding noise
/// of sum |x_j q_j| + |x_m|, with 10 digits to spare.
inline double quality_floor(const std::vector<BigComplex>& q, const IntVec& x, int k) {
  double big = log10_integer(abs(x.back()));
  for (std::size_t j = 0; j < q.size(); ++j)
    if (x[j] != 0) big = std::max(big, log10_integer(abs(x[j])) + q[j].log10_abs());
  return k - big - std::log10(static_cast<double>(q.size() + 1)) - 10;
}

/// Accepts a relation whose residual is both below 10^-(k - k' - 10) and
/// at the noise floor of its own coefficients. The second test rejects
/// the short spurious vectors that appear when Re and Im of the powers
/// decouple (theta purely imaginary, for instance).
inline bool quality_ok(const std::vector<BigComplex>& q, const IntVec& x, double quality, int k, int kprime) {
  return quality > k - kprime - 10 && quality > quality_floor(q, x, k);
}

inline IntVec primitive(IntVec x) {
  Integer g = 0;
  for (const auto& c : x) g = gcd(g, c);
  if (g > 1)
    for (auto& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return x;
}

}  // namespace detail

/// Lattice for the minimal polynomial of theta of degree d: columns
/// theta^d, ..., theta, 1.
inline LatticeProblem build_minpoly_lattice(const BigComplex& theta, int d, int kprime) {
  const int k = theta.digits();
  if (kprime >= k) throw PrecisionError("scaling exceeds precision");
  const int work = k + 20;
  const BigComplex t = theta.with_digits(work);
  std::vector<BigComplex> q(d);
  for (int i = d; i >= 1; --i) q[d - i] = pow(t, static_cast<unsigned>(i));
  return detail::relation_lattice(std::move(q), k, kprime, !detail::effectively_real(theta, k));
}

struct MinPolyResult {
  UniPoly polynomial;  // integral, content 1, positive leading coefficient
  int degree = 0;
  double quality = 0;
  IntVec lattice_vector;
  /// log10 of the candidate length and of det(L)^(1/n); their gap shows
  /// how close the acceptance was.
  double length_log10 = 0;
  double scale_log10 = 0;
};

struct Relation {
  int target = 0;      // j in 2..6
  std::vector<Integer> coeffs;  // b_0..b_{d1-1}
  Integer den = 1;     // b_{d1} > 0
  double quality = 0;

  /// b_{d1} alpha_j = sum b_i u^i as alpha_j = P(u).
  UniPoly as_poly(const std::string& var = "u") const {
    std::vector<Rational> c;
    for (const auto& b : coeffs) c.emplace_back(b, den);
    for (auto& r : c) r.canonicalize();
    return UniPoly(std::move(c), var);
  }

  BigComplex eval(const BigComplex& u, int digits) const {
    return as_poly().eval<BigComplex>(u.with_digits(digits), digits);
  }
};

/// Minimal polynomial of theta by increasing degree search, theta given to
/// k digits. Throws NoCandidateError if no degree up to dmax is accepted.
inline MinPolyResult find_minpoly(const BigComplex& theta_in, int dmax, int k, int kprime) {
  const BigComplex theta = theta_in.with_digits(std::min(k, theta_in.digits()));
  k = theta.digits();
  for (int d = 1; d <= dmax; ++d) {
    LatticeProblem lp = build_minpoly_lattice(theta, d, kprime);
    ShortVector sv = shortest_vector(lp.basis);
    const double len = 0.5 * log10_integer(sv.norm2);
    const double scale = detail::hermite_scale(lp);
    if (len >= scale - kHermiteMargin) continue;
    IntVec x = detail::relation_coefficients(lp, sv.vector);
    if (x[0] == 0) continue;
    const double quality = detail::relation_quality(lp.targets, x, k);
    if (!detail::quality_ok(lp.targets, x, quality, k, kprime)) continue;
    x = detail::primitive(x);
    std::vector<Integer> c(x.rbegin(), x.rend());
    if (c.back() < 0)
      for (auto& e : c) e = -e;
    MinPolyResult r;
    r.polynomial = UniPoly::from_integers(c, "u");
    r.degree = d;
    r.quality = quality;
    r.lattice_vector = sv.vector;
    r.length_log10 = len;
    r.scale_log10 = scale;
    return r;
  }
  throw NoCandidateError();
}

/// Relation b_{d1} beta = b_{d1-1} theta^{d1-1} + ... + b_0 with
/// d1 = [Q(theta):Q]. Throws NoCandidateError if none is accepted.
inline Relation find_relation(const BigComplex& theta_in, const BigComplex& beta_in, int d1, int k, int kprime) {
  const int prec = std::min({k, theta_in.digits(), beta_in.digits()});
  const int work = prec + 20;
  const BigComplex theta = theta_in.with_digits(work), beta = beta_in.with_digits(work);
  std::vector<BigComplex> q;
  for (int i = d1 - 1; i >= 1; --i) q.push_back(pow(theta, static_cast<unsigned>(i)));
  q.push_back(beta);
  const bool cplx = !detail::effectively_real(theta_in, prec) || !detail::effectively_real(beta_in, prec);
  LatticeProblem lp = detail::relation_lattice(q, prec, kprime, cplx);
  ShortVector sv = shortest_vector(lp.basis);
  if (0.5 * log10_integer(sv.norm2) >= detail::hermite_scale(lp) - kHermiteMargin) throw NoCandidateError();
  IntVec x = detail::relation_coefficients(lp, sv.vector);
  const int m = lp.degree;  // x[m-1] multiplies beta, x[m] the constant
  if (x[m - 1] == 0) throw NoCandidateError();
  const double quality = detail::relation_quality(lp.targets, x, prec);
  if (!detail::quality_ok(lp.targets, x, quality, prec, kprime)) throw NoCandidateError();
  x = detail::primitive(x);
  if (x[m - 1] < 0)
    for (auto& e : x) e = -e;
  Relation r;
  r.den = x[m - 1];
  r.coeffs.assign(d1, 0);
  r.coeffs[0] = -x[m];
  for (int i = d1 - 1; i >= 1; --i) r.coeffs[i] = -x[d1 - 1 - i];
  r.quality = quality;
  return r;
}

/// All complex roots of f at `digits`, sorted by (Re, Im) of their double
/// approximations. Aberth iteration in double for seeds, then Newton.
inline std::vector<BigComplex> polynomial_roots(const UniPoly& f, int digits) {
  const int n = f.degree();
  if (n < 1) throw InvariantError("polynomial of degree < 1 has no roots");
  const int work = digits + 20;
  std::vector<Complex> c;
  for (const auto& a : f.coeffs()) c.emplace_back(Rational(a / f.leading()).get_d(), 0.0);
  auto peval = [&](Complex z, Complex& dz) {
    Complex p = 1.0;
    dz = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      dz = dz * z + p;
      p = p * z + c[i];
    }
    return p;
  };
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::pow(std::abs(c[i]), 1.0 / (n - i)));
  bound = 2 * bound + 1e-3;
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(bound * 0.7, 2 * std::numbers::pi * (i + 0.25) / n);
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      Complex dp;
      Complex p = peval(z[i], dp);
      if (p == 0.0) continue;
      Complex ratio = p / dp;
      Complex s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * s);
      z[i] -= w;
      moved = std::max(moved, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (moved < 1e-15) break;
  }
  const UniPoly df = f.derivative();
  std::vector<BigComplex> roots;
  for (const auto& seed : z) {
    BigComplex r(seed, work);
    for (int it = 0; it < 200; ++it) {
      BigComplex step = f.eval<BigComplex>(r, work) / df.eval<BigComplex>(r, work);
      r -= step;
      if (step.log10_abs() - std::max(0.0, r.log10_abs()) < -(digits + 5)) break;
    }
    roots.push_back(r.with_digits(digits));
  }
  std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
    auto x = a.to_std(), y = b.to_std();
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

struct RootMatch {
  int index = 0;
  BigComplex root;
  /// log10(|a - nearest| / |a - second nearest|)
  double gap_log10 = 0;
};

/// The root of f closest to a. Throws PrecisionError unless the nearest
/// root is closer than 10^max_gap_log10 times the second nearest.
inline RootMatch select_root_numeric(const UniPoly& f, const BigComplex& a, double max_gap_log10 = -10) {
  auto roots = polynomial_roots(f, a.digits());
  RootMatch m;
  double best = INFINITY, second = INFINITY;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double d = (roots[i] - a).log10_abs();
    if (d < best) {
      second = best;
      best = d;
      m.index = static_cast<int>(i);
    } else if (d < second) {
      second = d;
    }
  }
  m.root = roots[m.index];
  m.gap_log10 = roots.size() == 1 ? -INFINITY : best - second;
  if (m.gap_log10 >= max_gap_log10) throw PrecisionError();
  return m;
}

struct TorsionOrbit {
  UniPoly minpoly;
  std::array<std::optional<Relation>, 5> relations;  // alpha2..alpha6
  std::vector<std::size_t> members;
  /// Member count equals the degree of the minimal polynomial.
  bool consistent = true;
  double margin_log10 = 0;

  int degree() const { return minpoly.degree(); }
  std::size_t size() const { return members.size(); }
};

struct ReconConfig {
  int digits = 1000;
  int dmax = 8;
  int kprime_offset = 50;
};

struct Reconstruction {
  std::vector<TorsionOrbit> orbits;
  /// Converged solutions whose minimal polynomial or relations were not found.
  std::vector<std::size_t> unresolved;
};

/// Groups converged solutions into Galois orbits. Solutions are matched to
/// an already known minimal polynomial before any lattice search, so the
/// expensive reductions run once per orbit.
inline Reconstruction reconstruct_orbits(const std::vector<NumericSolution>& sols, const ReconConfig& cfg) {
  struct Group {
    MinPolyResult mp;
    std::vector<std::size_t> members;
  };
  std::vector<Group> groups;
  Reconstruction out;
  auto digits_of = [&](const NumericSolution& s) {
    int d = cfg.digits;
    for (const auto& c : s.coords) d = std::min(d, c.digits());
    return d;
  };
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (!s.converged()) continue;
    const int k = digits_of(s);
    const int kprime = k - cfg.kprime_offset;
    const BigComplex& a1 = s.coords[0];
    bool placed = false;
    for (auto& g : groups) {
      const double q = -g.mp.polynomial.eval<BigComplex>(a1.with_digits(k + 20), k + 20).log10_abs();
      if (q > k - kprime - 10) {
        g.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    try {
      groups.push_back({find_minpoly(a1, cfg.dmax, k, kprime), {i}});
    } catch (const NoCandidateError&) {
      out.unresolved.push_back(i);
    }
  }

  for (const auto& g : groups) {
    std::vector<std::size_t> pending = g.members;
    const int d1 = g.mp.degree;
    while (!pending.empty()) {
      const auto& rep = sols[pending.front()];
      const int k = digits_of(rep);
      const int kprime = k - cfg.kprime_offset;
      TorsionOrbit orbit;
      orbit.minpoly = g.mp.polynomial;
      orbit.margin_log10 = g.mp.scale_log10 - g.mp.length_log10;
      bool ok = true;
      for (int j = 2; j <= 6 && ok; ++j) {
        try {
          Relation r = find_relation(rep.coords[0], rep.coords[j - 1], d1, k, kprime);
          r.target = j;
          orbit.relations[j - 2] = r;
        } catch (const NoCandidateError&) {
          ok = false;
        }
      }
      if (!ok) {
        out.unresolved.push_back(pending.front());
        pending.erase(pending.begin());
        continue;
      }
      std::vector<std::size_t> rest;
      for (std::size_t idx : pending) {
        const auto& s = sols[idx];
        const int ks = digits_of(s);
        const int work = ks + 20;
        bool holds = true;
        for (const auto& r : orbit.relations) {
          BigComplex diff = r->eval(s.coords[0], work) - s.coords[r->target - 1].with_digits(work);
          holds = holds && -diff.log10_abs() > cfg.kprime_offset - 10;
        }
        (holds ? orbit.members : rest).push_back(idx);
      }
      if (orbit.members.empty()) {
        // the representative failed its own relations
        out.unresolved.push_back(pending.front());
        rest.erase(std::find(rest.begin(), rest.end(), pending.front()));
      }
      orbit.consistent = static_cast<int>(orbit.members.size()) == d1;
      if (!orbit.members.empty()) out.orbits.push_back(std::move(orbit));
      pending = std::move(rest);
    }
  }

  auto key = [](const TorsionOrbit& o) {
    std::vector<Integer> k;
    k.emplace_back(o.degree());
    for (int i = o.degree(); i >= 0; --i) k.push_back(o.minpoly.coeff(i).get_num());
    for (const auto& r : o.relations) {
      k.push_back(r->den);
      k.insert(k.end(), r->coeffs.begin(), r->coeffs.end());
    }
    return k;
  };
  std::stable_sort(out.orbits.begin(), out.orbits.end(),
                   [&](const TorsionOrbit& a, const TorsionOrbit& b) { return key(a) < key(b); });
  std::sort(out.unresolved.begin(), out.unresolved.end());
  return out;
}

}  // namespace tors3
