#pragma once

// Independent checks on solved schemes and reconstructed orbits.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/evaluator.hpp"
#include "tors3/recon.hpp"
#include "tors3/scheme.hpp"
#include "tors3/solver.hpp"

namespace tors3 {

/// Number of nonzero 3-torsion points of a genus-3 Jacobian.
inline constexpr int kExpectedTorsion = 728;

struct ResidualReport {
  std::vector<double> residual_exps;  // one per converged solution, in order
  int tol_exp = 0;
  bool pass = true;
};

/// Re-evaluates all ten equations at each converged solution; passes iff
/// every max residual is below 10^-tol_exp.
inline ResidualReport residual_report(const TorsionScheme& ts, const std::vector<NumericSolution>& sols, int tol_exp) {
  ResidualReport r;
  r.tol_exp = tol_exp;
  for (const auto& s : sols) {
    if (!s.converged()) continue;
    int digits = s.coords.front().digits();
    for (const auto& c : s.coords) digits = std::min(digits, c.digits());
    const double e = residual_exponent(ts.system, s.coords, digits);
    r.residual_exps.push_back(e);
    r.pass = r.pass && e < -tol_exp;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p

namespace detail {

inline long mod_mul(long a, long b, long p) { return static_cast<long>(static_cast<__int128>(a) * b % p); }

inline long mod_pow(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool divides(long p, const Integer& z) { return z % p == 0; }

inline long integer_mod(const Integer& z, long p) {
  Integer r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

/// Splits p(x) = A x_v + B with all variables other than x_v set to
/// `vals`. Throws if p is not linear in x_v.
inline std::pair<long, long> linear_part_mod(const MultiPoly& poly, const std::vector<long>& vals, int v, long p) {
  long a = 0, b = 0;
  for (const auto& [e, c] : poly.terms()) {
    long t = rational_mod(c, p);
    for (int j = 0; j < static_cast<int>(e.size()); ++j) {
      if (j == v || e[j] == 0) continue;
      t = mod_mul(t, mod_pow(vals[j], e[j], p), p);
    }
    if (e[v] == 0) b = (b + t) % p;
    else if (e[v] == 1) a = (a + t) % p;
    else throw InvariantError("equation is not linear in the solved variable");
  }
  return {a, b};
}

inline long eval_mod(const MultiPoly& poly, const std::vector<long>& vals, long p) {
  long s = 0;
  for (const auto& [e, c] : poly.terms()) {
    long t = rational_mod(c, p);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) t = mod_mul(t, mod_pow(vals[j], e[j], p), p);
    s = (s + t) % p;
  }
  return s;
}

}  // namespace detail

/// Roots of an integral polynomial in F_p by exhaustive search.
inline std::vector<long> roots_mod(const UniPoly& f, long p) {
  std::vector<long> r;
  for (long x = 0; x < p; ++x)
    if (f.eval_mod(x, p) == 0) r.push_back(x);
  return r;
}

/// Whether p may be used to check `orbit` on `ts`: p > 3, prime, no
/// relation denominator, leading or constant coefficient of the minimal
/// polynomial, or discriminant factor of f is divisible by p, and the
/// minimal polynomial has a root mod p.
inline bool admissible_prime(const TorsionScheme& ts, const TorsionOrbit& orbit, long p) {
  if (p <= 3 || !detail::is_prime(p)) return false;
  for (const auto& r : orbit.relations)
    if (r && detail::divides(p, r->den)) return false;
  const UniPoly& m = orbit.minpoly;
  if (detail::divides(p, m.leading().get_num()) || detail::divides(p, m.coeff(0).get_num())) return false;
  const Rational disc = ts.curve.discriminant_resultant();
  if (detail::divides(p, disc.get_num()) || detail::divides(p, disc.get_den())) return false;
  for (const auto& c : ts.curve.f().coeffs())
    if (detail::divides(p, c.get_den())) return false;
  return !roots_mod(m, p).empty();
}

/// The smallest `count` admissible primes, searching upward from 5.
inline std::vector<long> admissible_primes(const TorsionScheme& ts, const TorsionOrbit& orbit, int count,
                                           long limit = 1'000'000) {
  std::vector<long> out;
  for (long p = 5; p < limit && static_cast<int>(out.size()) < count; ++p)
    if (admissible_prime(ts, orbit, p)) out.push_back(p);
  return out;
}

enum class CheckOutcome { kPass, kFail, kInconclusive };

inline std::string to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::kPass: return "pass";
    case CheckOutcome::kFail: return "fail";
    case CheckOutcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct ModularCheck {
  long prime = 0;
  int roots_tested = 0;
  CheckOutcome outcome = CheckOutcome::kPass;
  std::string detail;

  bool pass() const { return outcome == CheckOutcome::kPass; }
};

/// For every root u of the minimal polynomial mod p: a1..a6 from the
/// relations, a7..a10 from the four top equations (each linear in the next
/// unknown), then all ten equations must vanish in F_p.
inline ModularCheck modular_point_check(const TorsionScheme& ts, const TorsionOrbit& orbit, long p) {
  if (!admissible_prime(ts, orbit, p)) throw InvariantError("prime " + std::to_string(p) + " is not admissible");
  for (const auto& r : orbit.relations)
    if (!r) throw InvariantError("orbit is missing a relation");
  ModularCheck out;
  out.prime = p;
  for (long u : roots_mod(orbit.minpoly, p)) {
    ++out.roots_tested;
    std::vector<long> vals(kSchemeVars, 0);
    vals[0] = u;
    for (const auto& r : orbit.relations) {
      long num = 0;
      for (std::size_t i = r->coeffs.size(); i-- > 0;) {
        num = (detail::mod_mul(num, u, p) + detail::integer_mod(r->coeffs[i], p)) % p;
      }
      const long den = detail::integer_mod(r->den, p);
      vals[r->target - 1] = detail::mod_mul(num, detail::mod_inv(den, p), p);
    }
    for (int k = 0; k < 4; ++k) {
      const int v = 6 + k;
      auto [a, b] = detail::linear_part_mod(ts.equation(9 - k), vals, v, p);
      if (a == 0) {
        out.outcome = CheckOutcome::kInconclusive;
        out.detail = "zero pivot for a" + std::to_string(v + 1) + " at u = " + std::to_string(u) + ", change prime";
        return out;
      }
      vals[v] = detail::mod_mul((p - b) % p, detail::mod_inv(a, p), p);
    }
    for (int i = 0; i < kSchemeVars; ++i) {
      if (detail::eval_mod(ts.equation(i), vals, p) != 0) {
        out.outcome = CheckOutcome::kFail;
        out.detail = "equation " + std::to_string(i + 1) + " nonzero at u = " + std::to_string(u);
        return out;
      }
    }
  }
  return out;
}

/// Checks at the `count` smallest admissible primes. An inconclusive prime
/// is replaced by the next admissible one.
inline std::vector<ModularCheck> multi_prime_check(const TorsionScheme& ts, const TorsionOrbit& orbit, int count,
                                                   long limit = 1'000'000) {
  std::vector<ModularCheck> out;
  int done = 0;
  for (long p = 5; p < limit && done < count; ++p) {
    if (!admissible_prime(ts, orbit, p)) continue;
    ModularCheck c = modular_point_check(ts, orbit, p);
    if (c.outcome != CheckOutcome::kInconclusive) ++done;
    out.push_back(std::move(c));
  }
  return out;
}

struct Census {
  std::size_t total = 0;  // distinct converged solutions
  int expected = kExpectedTorsion;
  std::vector<std::size_t> orbit_sizes;  // ascending
  std::size_t orbit_sum = 0;
  std::size_t unresolved = 0;

  bool total_matches() const { return total == static_cast<std::size_t>(expected); }
  /// Every distinct solution lies in exactly one orbit or is unresolved.
  bool sums_consistent() const { return orbit_sum + unresolved == total; }
  bool pass() const { return total_matches() && sums_consistent(); }
};

inline Census census(const std::vector<NumericSolution>& sols, const Reconstruction& rec) {
  Census c;
  for (const auto& s : sols) c.total += s.converged() ? 1 : 0;
  for (const auto& o : rec.orbits) {
    c.orbit_sizes.push_back(o.size());
    c.orbit_sum += o.size();
  }
  std::sort(c.orbit_sizes.begin(), c.orbit_sizes.end());
  c.unresolved = rec.unresolved.size();
  return c;
}

struct NegationCheck {
  bool pass = true;
  std::vector<std::size_t> unmatched;  // converged solutions with no partner
};

/// Odd models only: the set of converged solutions must be closed under
/// (a1, a2..a6, a7..a10) -> (a1, -a2..-a6, a7..a10).
inline NegationCheck negation_closure_check(const std::vector<NumericSolution>& sols, Parity parity, int exp) {
  if (parity != Parity::kOdd) throw InvariantError("negation closure applies to odd-degree models only");
  NegationCheck out;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (sols[i].converged()) idx.push_back(i);
  for (std::size_t i : idx) {
    NumericSolution neg = sols[i];
    for (int j = 1; j <= 5; ++j) neg.coords[j] = -neg.coords[j];
    bool found = false;
    for (std::size_t k : idx)
      if (same_point(neg, sols[k], exp)) {
        found = true;
        break;
      }
    if (!found) out.unmatched.push_back(i);
  }
  out.pass = out.unmatched.empty();
  return out;
}

struct OrbitCheck {
  std::size_t orbit = 0;
  std::vector<ModularCheck> checks;
  bool pass() const {
    int ok = 0;
    for (const auto& c : checks) {
      if (c.outcome == CheckOutcome::kFail) return false;
      ok += c.pass();
    }
    return ok > 0;
  }
};

struct VerificationReport {
  ResidualReport residuals;
  Census census;
  std::vector<OrbitCheck> orbit_checks;
  std::optional<NegationCheck> negation;

  bool pass() const {
    bool ok = residuals.pass && census.pass();
    for (const auto& o : orbit_checks) ok = ok && o.pass();
    if (negation) ok = ok && negation->pass;
    return ok;
  }
};

inline VerificationReport verify_all(const TorsionScheme& ts, const std::vector<NumericSolution>& sols,
                                     const Reconstruction& rec, int tol_exp, int primes, int dedup_exp) {
  VerificationReport r;
  r.residuals = residual_report(ts, sols, tol_exp);
  r.census = census(sols, rec);
  for (std::size_t i = 0; i < rec.orbits.size(); ++i)
    r.orbit_checks.push_back({i, multi_prime_check(ts, rec.orbits[i], primes)});
  if (ts.parity == Parity::kOdd) r.negation = negation_closure_check(sols, ts.parity, dedup_exp);
  return r;
}

}  // namespace tors3
