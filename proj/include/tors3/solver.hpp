#pragma once

// Total-degree homotopy continuation and high-precision Newton refinement.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tors3/big.hpp"
#include "tors3/error.hpp"
#include "tors3/evaluator.hpp"
#include "tors3/linalg.hpp"
#include "tors3/multipoly.hpp"
#include "tors3/parallel.hpp"
#include "tors3/scalar.hpp"
#include "tors3/scheme.hpp"

namespace tors3 {

/// F_i(x) = gamma_i (x_i^{d_i} - 1) with d_i = deg e_i.
struct StartSystem {
  std::vector<int> degrees;
  std::vector<Complex> gamma;
  std::uint64_t seed = 0;

  std::uint64_t root_count() const {
    std::uint64_t n = 1;
    for (int d : degrees) n *= static_cast<std::uint64_t>(d);
    return n;
  }

  /// Start root number `index`: coordinate j is exp(2 pi i k_j / d_j) with
  /// (k_1, ..., k_n) the mixed-radix digits of index, k_1 least significant.
  std::vector<Complex> root(std::uint64_t index) const {
    if (index >= root_count()) throw InvariantError("start root index out of range");
    std::vector<Complex> x(degrees.size());
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      const auto d = static_cast<std::uint64_t>(degrees[j]);
      const double k = static_cast<double>(index % d);
      index /= d;
      x[j] = std::polar(1.0, 2.0 * std::numbers::pi * k / static_cast<double>(d));
    }
    return x;
  }

  /// Values of F at x.
  std::vector<Complex> eval(std::span<const Complex> x) const {
    std::vector<Complex> v(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) v[i] = gamma[i] * (std::pow(x[i], degrees[i]) - 1.0);
    return v;
  }
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw; spelled
/// out so the sequence does not depend on the standard library's
/// distribution implementations.
inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline StartSystem make_start_system(const PolySystem& sys, std::uint64_t seed) {
  StartSystem ss;
  ss.seed = seed;
  ss.degrees = sys.degrees();
  for (int d : ss.degrees)
    if (d < 1) throw InvariantError("start system needs every equation of degree >= 1");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < ss.degrees.size(); ++i)
    ss.gamma.push_back(std::polar(1.0, 2.0 * std::numbers::pi * unit_double(rng)));
  return ss;
}

inline StartSystem make_start_system(const TorsionScheme& ts, std::uint64_t seed) {
  return make_start_system(ts.system, seed);
}

/// Homogenization with z_0 as the new first variable: each e_i becomes
/// z_0^{deg e_i} e_i(z_1/z_0, ..., z_n/z_0).
inline PolySystem homogenize(const PolySystem& sys) {
  const int n = sys.nvars();
  std::vector<MultiPoly> eqs;
  for (const auto& e : sys.equations) {
    const int d = e.total_degree();
    MultiPoly h(n + 1);
    for (const auto& [ex, c] : e.terms()) {
      Exponents hx(n + 1);
      int k = 0;
      for (int j = 0; j < n; ++j) {
        hx[j + 1] = ex[j];
        k += ex[j];
      }
      hx[0] = static_cast<std::uint8_t>(d - k);
      h.add_term(hx, c);
    }
    eqs.push_back(std::move(h));
  }
  return PolySystem::from_equations(std::move(eqs));
}

enum class Predictor { kZeroOrder, kTangent };

inline std::string to_string(Predictor p) { return p == Predictor::kZeroOrder ? "zero-order" : "tangent"; }

struct TrackConfig {
  int steps = 200;
  int digits = kDoubleDigits;
  int corrector_iters = 6;
  int max_halvings = 30;
  double divergence_cutoff = 1e10;
  std::uint64_t seed = 1;
  int target_digits = 5000;
  int dedup_exponent = 20;
  int refine_max_iter = 40;
  int jobs = 0;
  Predictor predictor = Predictor::kTangent;

  void validate() const {
    if (steps < 1) throw InvariantError("steps must be >= 1");
    if (digits < kDoubleDigits) throw InvariantError("tracking digits must be >= 16");
    if (corrector_iters < 1) throw InvariantError("corrector iterations must be >= 1");
    if (target_digits < digits) throw InvariantError("target digits below tracking digits");
    if (dedup_exponent < 1) throw InvariantError("dedup exponent must be positive");
  }
};

enum class PathStatus { kConverged, kDiverged, kSingular, kDuplicate };

inline std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::kConverged: return "converged";
    case PathStatus::kDiverged: return "diverged";
    case PathStatus::kSingular: return "singular";
    case PathStatus::kDuplicate: return "duplicate";
  }
  return "?";
}

inline PathStatus parse_path_status(const std::string& s) {
  if (s == "converged") return PathStatus::kConverged;
  if (s == "diverged") return PathStatus::kDiverged;
  if (s == "singular") return PathStatus::kSingular;
  if (s == "duplicate") return PathStatus::kDuplicate;
  throw InvariantError("unknown solution status '" + s + "'");
}

struct NumericSolution {
  std::vector<BigComplex> coords;
  int precision = kDoubleDigits;
  /// log10 of max_i |e_i(coords)|; -inf for an exact zero.
  double residual_exp = INFINITY;
  PathStatus status = PathStatus::kSingular;
  std::uint64_t path = 0;
  /// Homotopy parameter reached by the tracker.
  double end_t = 0;

  bool converged() const { return status == PathStatus::kConverged; }

  std::vector<Complex> approx() const {
    std::vector<Complex> z;
    for (const auto& c : coords) z.push_back(c.to_std());
    return z;
  }
};

namespace detail {

inline Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

inline double inf_norm(std::span<const Complex> x) {
  double m = 0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

/// Double-precision tracker for one system; not thread-safe, one per worker.
/// `hom` must be homogenize(sys).
///
/// Paths live on the projective closure: the point is z = (z_0, ..., z_n)
/// with x_j = z_j / z_0, kept at unit length, and the extra equation
/// conj(z_prev) . z = 1 pins the scaling (a patch that moves with the path).
class PathTracker {
 public:
  PathTracker(const PolySystem& sys, const PolySystem& hom, const StartSystem& ss, const TrackConfig& cfg)
      : ev_(sys, kDoubleDigits), hev_(hom, kDoubleDigits), ss_(ss), cfg_(cfg), n_(sys.nvars()) {
    if (sys.size() != n_) throw InvariantError("homotopy needs a square system");
    if (static_cast<int>(ss.degrees.size()) != n_)
      throw InvariantError("start system does not match the target");
    if (hom.nvars() != n_ + 1 || hom.size() != n_) throw InvariantError("homogenized system does not match");
  }

  NumericSolution track(std::uint64_t index) {
    NumericSolution out;
    out.path = index;
    out.precision = kDoubleDigits;

    std::vector<Complex> z(n_ + 1);
    {
      auto r = ss_.root(index);
      z[0] = 1.0;
      for (int j = 0; j < n_; ++j) z[j + 1] = r[j];
      normalize(z);
    }

    const double max_step = 1.0 / cfg_.steps;
    const double min_step = std::ldexp(max_step, -cfg_.max_halvings);
    double t = 0.0, h = max_step;
    int streak = 0;
    bool ok = true;
    while (t < 1.0) {
      const double dt = std::min(h, 1.0 - t);
      const double t1 = (1.0 - t - dt < 1e-15) ? 1.0 : t + dt;
      y_ = z;
      bool step_ok = true;
      if (cfg_.predictor == Predictor::kTangent) step_ok = predict(t, t1 - t, y_);
      if (step_ok) step_ok = correct(t1, y_);
      if (step_ok) {
        z.swap(y_);
        normalize(z);
        t = t1;
        if (affine_norm(z) > cfg_.divergence_cutoff) {
          out.status = PathStatus::kDiverged;
          ok = false;
          break;
        }
        if (++streak >= 2 && h < max_step) {
          h = std::min(2 * h, max_step);
          streak = 0;
        }
      } else {
        streak = 0;
        h /= 2;
        if (h < min_step) {
          out.status = affine_norm(z) > std::sqrt(cfg_.divergence_cutoff) ? PathStatus::kDiverged : PathStatus::kSingular;
          ok = false;
          break;
        }
      }
    }

    out.end_t = t;
    std::vector<Complex> x(n_);
    const bool finite = std::abs(z[0]) > 0;
    for (int j = 0; j < n_; ++j) x[j] = finite ? z[j + 1] / z[0] : Complex(INFINITY, 0);
    if (ok && affine_norm(z) > cfg_.divergence_cutoff) {
      out.status = PathStatus::kDiverged;
      ok = false;
    }
    if (ok) ok = polish(x);
    if (ok && inf_norm(x) > cfg_.divergence_cutoff) {
      out.status = PathStatus::kDiverged;
      ok = false;
    }
    if (ok) out.status = PathStatus::kConverged;
    if (finite) {
      ev_.eval(x, val_, nullptr, ws_);
      double r = 0;
      for (const auto& v : val_) r = std::max(r, std::abs(v));
      out.residual_exp = r == 0 ? -INFINITY : std::log10(r);
    }
    for (const auto& c : x) out.coords.emplace_back(c, kDoubleDigits);
    return out;
  }

 private:
  // Rescales z to unit length and re-centres the patch on it.
  void normalize(std::vector<Complex>& z) {
    double s = 0;
    for (const auto& c : z) s += std::norm(c);
    s = 1.0 / std::sqrt(s);
    chart_.resize(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
      z[j] *= s;
      chart_[j] = std::conj(z[j]);
    }
  }

  static double affine_norm(std::span<const Complex> z) {
    double m = 0;
    for (std::size_t j = 1; j < z.size(); ++j) m = std::max(m, std::abs(z[j]));
    const double z0 = std::abs(z[0]);
    return z0 == 0 ? INFINITY : m / z0;
  }

  // H(z, t) = (1 - t) F(z) + t E(z) on the chart, with its z-Jacobian and,
  // if asked, dH/dt = E - F. The last row is the chart equation.
  void homotopy(double t, std::span<const Complex> z, bool want_dt) {
    hev_.eval(z, val_, &jac_, ws_);
    const int m = n_ + 1;
    hv_.resize(m);
    ht_.resize(m);
    if (hj_.rows() != m) hj_ = Matrix<Complex>(m, m);
    for (int i = 0; i < n_; ++i) {
      const int d = ss_.degrees[i];
      const Complex zi1 = ipow(z[i + 1], d - 1), z01 = ipow(z[0], d - 1);
      const Complex f = ss_.gamma[i] * (zi1 * z[i + 1] - z01 * z[0]);
      hv_[i] = (1.0 - t) * f + t * val_[i];
      if (want_dt) ht_[i] = val_[i] - f;
      for (int j = 0; j < m; ++j) hj_(i, j) = t * jac_(i, j);
      const Complex g = (1.0 - t) * ss_.gamma[i] * static_cast<double>(d);
      hj_(i, i + 1) += g * zi1;
      hj_(i, 0) -= g * z01;
    }
    Complex lin = -1.0;
    for (int j = 0; j < m; ++j) {
      lin += chart_[j] * z[j];
      hj_(n_, j) = chart_[j];
    }
    hv_[n_] = lin;
    ht_[n_] = 0;
  }

  bool predict(double t, double dt, std::vector<Complex>& y) {
    homotopy(t, y, true);
    rhs_.resize(n_ + 1);
    for (int i = 0; i <= n_; ++i) rhs_[i] = -ht_[i];
    try {
      solve_linear_inplace(hj_, rhs_, kLinearDigits);
    } catch (const SingularError&) {
      return false;
    }
    for (int i = 0; i <= n_; ++i) y[i] += dt * rhs_[i];
    return true;
  }

  bool correct(double t, std::vector<Complex>& y) {
    double prev = INFINITY;
    for (int it = 0; it < cfg_.corrector_iters; ++it) {
      homotopy(t, y, false);
      rhs_.resize(n_ + 1);
      for (int i = 0; i <= n_; ++i) rhs_[i] = -hv_[i];
      try {
        solve_linear_inplace(hj_, rhs_, kLinearDigits);
      } catch (const SingularError&) {
        return false;
      }
      for (int i = 0; i <= n_; ++i) y[i] += rhs_[i];
      const double step = inf_norm(rhs_);
      if (!std::isfinite(step)) return false;
      if (it == 0 && step > kMaxFirstCorrection) return false;
      if (it > 0 && step > kMinContraction * prev) return false;
      if (step <= kCorrectorTol * (1.0 + inf_norm(y))) return true;
      prev = step;
    }
    return false;
  }

  bool polish(std::vector<Complex>& x) {
    for (int it = 0; it < 8; ++it) {
      ev_.eval(x, val_, &jac_, ws_);
      rhs_.resize(n_);
      for (int i = 0; i < n_; ++i) rhs_[i] = -val_[i];
      try {
        solve_linear_inplace(jac_, rhs_, kLinearDigits);
      } catch (const SingularError&) {
        return false;
      }
      for (int i = 0; i < n_; ++i) x[i] += rhs_[i];
      if (inf_norm(rhs_) <= kPolishTol * (1.0 + inf_norm(x))) return true;
    }
    return false;
  }

  // solve_linear treats pivots below 10^-(digits/2) of the largest entry as
  // singular; at double precision 10^-13 is about as far as that can go.
  static constexpr int kLinearDigits = 26;
  static constexpr double kCorrectorTol = 1e-9;
  // On the unit-length chart a large first correction, or a slowly
  // contracting one, means the predictor left the basin of its own path.
  static constexpr double kMaxFirstCorrection = 0.05;
  static constexpr double kMinContraction = 0.25;
  static constexpr double kPolishTol = 1e-13;

  SystemEvaluator<Complex> ev_;
  SystemEvaluator<Complex> hev_;
  const StartSystem& ss_;
  TrackConfig cfg_;
  int n_;
  SystemEvaluator<Complex>::Workspace ws_;
  std::vector<Complex> val_, hv_, ht_, rhs_, y_, chart_;
  Matrix<Complex> jac_, hj_;
};

}  // namespace detail

inline NumericSolution track_path(const PolySystem& sys, const StartSystem& ss, std::uint64_t root_index,
                                  const TrackConfig& cfg) {
  cfg.validate();
  detail::PathTracker tracker(sys, homogenize(sys), ss, cfg);
  return tracker.track(root_index);
}

inline NumericSolution track_path(const TorsionScheme& ts, const StartSystem& ss, std::uint64_t root_index,
                                  const TrackConfig& cfg) {
  return track_path(ts.system, ss, root_index, cfg);
}

/// Residual log10 max_i |e_i(x)| evaluated at `digits` through
/// eval_multipoly, independent of the Newton machinery.
inline double residual_exponent(const PolySystem& sys, std::span<const BigComplex> x, int digits) {
  double r = -INFINITY;
  for (const auto& e : sys.equations) r = std::max(r, eval_multipoly(e, x, digits).log10_abs());
  return r;
}

/// Newton iteration with a working precision that doubles every step, so
/// the cost tracks the number of correct digits.
class Refiner {
 public:
  explicit Refiner(const PolySystem& sys) : sys_(sys) {}

  /// Refines x0 to target_digits. When `trace` is non-null every iterate is
  /// appended to it.
  NumericSolution refine(const NumericSolution& x0, int target_digits, int max_iter,
                         std::vector<std::vector<BigComplex>>* trace = nullptr) {
    const int n = sys_.nvars();
    if (static_cast<int>(x0.coords.size()) != n) throw InvariantError("solution arity mismatch");
    NumericSolution out = x0;
    out.status = PathStatus::kSingular;

    int work = std::min(std::max(2 * kDoubleDigits, 2 * x0.precision), target_digits);
    std::vector<BigComplex> x;
    for (const auto& c : x0.coords) x.push_back(c.with_digits(std::max(work, c.digits())));
    if (trace) trace->push_back(x);

    const double goal = -(target_digits - 30.0);
    double prev_step = INFINITY;
    for (int it = 0; it < max_iter; ++it) {
      const auto& ev = evaluator(work + kGuardDigits);
      std::vector<BigComplex> xw;
      for (const auto& c : x) xw.push_back(c.with_digits(work + kGuardDigits));
      std::vector<BigComplex> val;
      Matrix<BigComplex> jac;
      ev.eval(xw, val, &jac);
      for (auto& v : val) v = -v;
      std::vector<BigComplex> dx;
      try {
        dx = solve_linear<BigComplex>(jac, val, work + kGuardDigits);
      } catch (const SingularError&) {
        break;
      }
      double step = -INFINITY, scale = 0;
      for (int i = 0; i < n; ++i) {
        xw[i] += dx[i];
        step = std::max(step, dx[i].log10_abs());
        scale = std::max(scale, xw[i].log10_abs());
      }
      for (int i = 0; i < n; ++i) x[i] = xw[i].with_digits(work);
      if (trace) trace->push_back(x);

      const double rel = step - std::max(0.0, scale);
      if (work == target_digits && (rel < -(work - kSettleDigits) || !std::isfinite(step))) {
        double r = residual_exponent(sys_, x, target_digits);
        if (r < goal) {
          out.status = PathStatus::kConverged;
          out.residual_exp = r;
          break;
        }
      }
      // no contraction: the start point was not in a quadratic basin
      if (it >= 3 && std::isfinite(prev_step) && step > prev_step - 1.0 && work == target_digits &&
          rel > -(work - kSettleDigits))
        break;
      prev_step = step;
      if (work < target_digits) {
        // one more doubling of correct digits per step
        const int correct = static_cast<int>(-rel);
        work = std::min(target_digits, std::max(2 * work, 2 * correct + kGuardDigits));
        for (auto& c : x) c = c.with_digits(work);
      }
    }
    out.coords = x;
    out.precision = target_digits;
    if (out.status != PathStatus::kConverged) out.residual_exp = residual_exponent(sys_, x, target_digits);
    return out;
  }

 private:
  static constexpr int kSettleDigits = 15;

  const SystemEvaluator<BigComplex>& evaluator(int digits) {
    auto it = cache_.find(digits);
    if (it == cache_.end()) it = cache_.emplace(digits, SystemEvaluator<BigComplex>(sys_, digits)).first;
    return it->second;
  }

  const PolySystem& sys_;
  std::map<int, SystemEvaluator<BigComplex>> cache_;
};

inline NumericSolution newton_refine(const PolySystem& sys, const NumericSolution& x0, int target_digits,
                                     int max_iter = 40) {
  Refiner r(sys);
  return r.refine(x0, target_digits, max_iter);
}

inline NumericSolution newton_refine(const TorsionScheme& ts, const NumericSolution& x0, int target_digits,
                                     int max_iter = 40) {
  return newton_refine(ts.system, x0, target_digits, max_iter);
}

/// Sort key: every coordinate's real and imaginary part rounded to 30
/// decimal places.
inline std::vector<Integer> canonical_key(const NumericSolution& s) {
  std::vector<Integer> key;
  for (const auto& c : s.coords) {
    const int d = std::max(c.digits(), 60);
    const BigReal scale = pow10(30, d);
    const BigReal half(0.5, d);
    key.push_back(floor_int(c.re.with_digits(d) * scale + half));
    key.push_back(floor_int(c.im.with_digits(d) * scale + half));
  }
  return key;
}

/// Canonical order: converged solutions by canonical_key, then the rest by
/// path index.
inline void canonical_sort(std::vector<NumericSolution>& sols) {
  std::vector<std::pair<std::vector<Integer>, std::size_t>> keys;
  for (std::size_t i = 0; i < sols.size(); ++i)
    keys.push_back({sols[i].converged() ? canonical_key(sols[i]) : std::vector<Integer>{}, i});
  std::vector<std::size_t> order(sols.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ca = sols[a].converged(), cb = sols[b].converged();
    if (ca != cb) return ca;
    if (ca) return keys[a].first < keys[b].first;
    return sols[a].path < sols[b].path;
  });
  std::vector<NumericSolution> out;
  out.reserve(sols.size());
  for (auto i : order) out.push_back(std::move(sols[i]));
  sols = std::move(out);
}

/// True if every coordinate of a and b differs by less than 10^-exp.
inline bool same_point(const NumericSolution& a, const NumericSolution& b, int exp) {
  const double tol = -static_cast<double>(exp);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    // cheap rejection in double first
    if (std::abs(a.coords[i].to_std() - b.coords[i].to_std()) > 1e-6 * (1 + std::abs(a.coords[i].to_std())))
      return false;
  }
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const int d = std::min(a.coords[i].digits(), b.coords[i].digits());
    if ((a.coords[i].with_digits(d) - b.coords[i].with_digits(d)).log10_abs() >= tol) return false;
  }
  return true;
}

/// Marks all but the first of each cluster of coinciding converged
/// solutions as duplicates. Expects canonical order.
inline void mark_duplicates(std::vector<NumericSolution>& sols, int exp) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (!sols[i].converged()) continue;
    bool dup = false;
    for (auto k : kept)
      if (same_point(sols[k], sols[i], exp)) {
        dup = true;
        break;
      }
    if (dup) sols[i].status = PathStatus::kDuplicate;
    else kept.push_back(i);
  }
}

/// A path that reached t = 1 at a finite point but failed the double
/// precision polish; the high-precision refiner decides whether it is a
/// regular solution.
inline bool reached_end(const NumericSolution& s) {
  return s.status == PathStatus::kSingular && s.end_t >= 1.0 && std::isfinite(s.residual_exp) && s.residual_exp < 0;
}

/// Tracks the given start-root indices (all of them when `paths` is empty),
/// refines converged endpoints to cfg.target_digits, deduplicates, and sorts
/// canonically. Output does not depend on cfg.jobs.
inline std::vector<NumericSolution> solve_paths(const PolySystem& sys, const StartSystem& ss,
                                                std::vector<std::uint64_t> paths, const TrackConfig& cfg) {
  cfg.validate();
  if (paths.empty()) {
    paths.resize(ss.root_count());
    for (std::uint64_t i = 0; i < paths.size(); ++i) paths[i] = i;
  }
  const int workers = std::min<int>(resolve_jobs(cfg.jobs), static_cast<int>(std::max<std::size_t>(paths.size(), 1)));
  const PolySystem hom = homogenize(sys);
  std::vector<std::optional<detail::PathTracker>> trackers(workers);
  std::vector<NumericSolution> sols(paths.size());
  parallel_for(paths.size(), workers, [&](std::size_t i, int w) {
    if (!trackers[w]) trackers[w].emplace(sys, hom, ss, cfg);
    sols[i] = trackers[w]->track(paths[i]);
  });

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (sols[i].converged() || reached_end(sols[i])) todo.push_back(i);
  std::vector<std::optional<Refiner>> refiners(workers);
  parallel_for(todo.size(), workers, [&](std::size_t k, int w) {
    if (!refiners[w]) refiners[w].emplace(sys);
    auto& s = sols[todo[k]];
    auto r = refiners[w]->refine(s, cfg.target_digits, cfg.refine_max_iter);
    r.path = s.path;
    s = std::move(r);
  });

  canonical_sort(sols);
  mark_duplicates(sols, cfg.dedup_exponent);
  return sols;
}

inline std::vector<NumericSolution> solve_all(const TorsionScheme& ts, const TrackConfig& cfg) {
  return solve_paths(ts.system, make_start_system(ts, cfg.seed), {}, cfg);
}

/// Summary counts of a solve.
struct SolveCounts {
  std::size_t converged = 0, diverged = 0, singular = 0, duplicate = 0;
};

inline SolveCounts count_statuses(const std::vector<NumericSolution>& sols) {
  SolveCounts c;
  for (const auto& s : sols) switch (s.status) {
      case PathStatus::kConverged: ++c.converged; break;
      case PathStatus::kDiverged: ++c.diverged; break;
      case PathStatus::kSingular: ++c.singular; break;
      case PathStatus::kDuplicate: ++c.duplicate; break;
    }
  return c;
}

}  // namespace tors3
