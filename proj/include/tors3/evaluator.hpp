#pragma once

#include <map>
#include <span>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/linalg.hpp"
#include "tors3/multipoly.hpp"
#include "tors3/scalar.hpp"

namespace tors3 {

/// Precompiled evaluator for a PolySystem and its Jacobian.
///
/// Every distinct monomial that occurs in the equations or in any Jacobian
/// entry is evaluated once per call from a table of variable powers; each
/// output is then a short dot product with real coefficients.
template <class S>
class SystemEvaluator {
  using T = ScalarTraits<S>;
  using Real = typename T::Real;

 public:
  SystemEvaluator(const PolySystem& sys, int digits) : n_(sys.nvars()), m_(sys.size()), digits_(digits) {
    max_pow_.assign(n_, 0);
    std::map<Exponents, int> index;
    auto compile = [&](const MultiPoly& p) {
      std::vector<Term> out;
      for (const auto& [e, c] : p.terms()) {
        auto [it, fresh] = index.try_emplace(e, static_cast<int>(monos_.size()));
        if (fresh) {
          Mono mono;
          for (int k = 0; k < n_; ++k)
            if (e[k] > 0) {
              mono.factors.push_back({k, e[k]});
              max_pow_[k] = std::max(max_pow_[k], static_cast<int>(e[k]));
            }
          monos_.push_back(std::move(mono));
        }
        out.push_back({T::real_from_rational(c, digits), it->second});
      }
      return out;
    };
    for (const auto& e : sys.equations) eqs_.push_back(compile(e));
    for (const auto& row : sys.jacobian)
      for (const auto& entry : row) jac_.push_back(compile(entry));
  }

  int nvars() const { return n_; }
  int size() const { return m_; }
  int digits() const { return digits_; }

  /// Scratch buffers reused across calls by hot loops.
  struct Workspace {
    std::vector<std::vector<S>> pw;
    std::vector<S> mv;
  };

  /// Values of all equations, and the Jacobian when `jac` is non-null.
  void eval(std::span<const S> x, std::vector<S>& values, Matrix<S>* jac) const {
    Workspace ws;
    eval(x, values, jac, ws);
  }

  void eval(std::span<const S> x, std::vector<S>& values, Matrix<S>* jac, Workspace& ws) const {
    if (static_cast<int>(x.size()) != n_) throw InvariantError("point arity mismatch");
    auto& pw = ws.pw;
    pw.resize(n_);
    for (int k = 0; k < n_; ++k) {
      pw[k].resize(max_pow_[k] + 1);
      pw[k][0] = T::one(digits_);
      for (int r = 1; r <= max_pow_[k]; ++r) pw[k][r] = pw[k][r - 1] * x[k];
    }
    auto& mv = ws.mv;
    mv.resize(monos_.size());
    for (std::size_t m = 0; m < monos_.size(); ++m) {
      const auto& mono = monos_[m];
      if (mono.factors.empty()) {
        mv[m] = T::one(digits_);
        continue;
      }
      S v = pw[mono.factors[0].var][mono.factors[0].pow];
      for (std::size_t f = 1; f < mono.factors.size(); ++f) v = v * pw[mono.factors[f].var][mono.factors[f].pow];
      mv[m] = std::move(v);
    }
    values.resize(m_);
    for (int i = 0; i < m_; ++i) values[i] = dot(eqs_[i], mv);
    if (jac) {
      if (jac->rows() != m_ || jac->cols() != n_) *jac = Matrix<S>(m_, n_, T::zero(digits_));
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) (*jac)(i, j) = dot(jac_[static_cast<std::size_t>(i) * n_ + j], mv);
    }
  }

 private:
  struct Factor {
    int var;
    int pow;
  };
  struct Mono {
    std::vector<Factor> factors;
  };
  struct Term {
    Real coeff;
    int mono;
  };

  S dot(const std::vector<Term>& terms, const std::vector<S>& mv) const {
    S acc = T::zero(digits_);
    for (const auto& t : terms) acc += t.coeff * mv[t.mono];
    return acc;
  }

  int n_;
  int m_;
  int digits_;
  std::vector<int> max_pow_;
  std::vector<Mono> monos_;
  std::vector<std::vector<Term>> eqs_;
  std::vector<std::vector<Term>> jac_;
};

/// Guard digits added to every extended-precision evaluation.
inline constexpr int kGuardDigits = 20;

/// Value of p at pt, computed with kGuardDigits extra digits and returned at
/// `digits`. Every coordinate must already carry at least `digits`.
inline BigComplex eval_multipoly(const MultiPoly& p, std::span<const BigComplex> pt, int digits) {
  for (const auto& z : pt)
    if (z.digits() < digits) throw PrecisionError();
  const int work = digits + kGuardDigits;
  std::vector<BigComplex> x;
  x.reserve(pt.size());
  for (const auto& z : pt) x.push_back(z.with_digits(std::max(work, z.digits())));
  return p.eval<BigComplex>(std::span<const BigComplex>(x), work).with_digits(digits);
}

}  // namespace tors3
