#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/rational.hpp"
#include "tors3/scalar.hpp"

namespace tors3 {

using Exponents = std::vector<std::uint8_t>;

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept
/// in a map keyed by exponent vector, so there are never duplicate
/// monomials and zero coefficients are erased on every update.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  /// The polynomial x_j (0-based).
  static MultiPoly variable(int nvars, int j) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[j] = 1;
    p.add_term(e, 1);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw InvariantError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(int j) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[j]));
    return d;
  }

  bool contains_var(int j) const { return degree_in(j) > 0; }

  MultiPoly derivative(int j) const {
    MultiPoly d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponents f = e;
      --f[j];
      d.add_term(f, c * static_cast<long>(e[j]));
    }
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int k = 0; k < a.nvars_; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(nvars_, 1);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  /// Plain Horner-free evaluation; fine for one-off use. Hot loops go
  /// through SystemEvaluator instead.
  template <class S>
  S eval(std::span<const S> x, int digits) const {
    using T = ScalarTraits<S>;
    if (static_cast<int>(x.size()) != nvars_) throw InvariantError("point arity mismatch");
    S acc = T::zero(digits);
    for (const auto& [e, c] : terms_) {
      S m = T::from_rational(c, digits);
      for (int k = 0; k < nvars_; ++k)
        for (int r = 0; r < e[k]; ++r) m = m * x[k];
      acc = acc + m;
    }
    return acc;
  }

  /// Value in F_p at an integer point; denominators must be units.
  long eval_mod(std::span<const long> x, long p) const {
    long acc = 0;
    for (const auto& [e, c] : terms_) {
      long m = rational_mod(c, p);
      for (int k = 0; k < nvars_; ++k)
        for (int r = 0; r < e[k]; ++r) m = static_cast<long>((static_cast<__int128>(m) * x[k]) % p);
      acc = (acc + m) % p;
    }
    return acc;
  }

  /// Readable form using names a1..an, e.g. "2*a1*a3^2 - 1/2".
  std::string to_string(const std::string& prefix = "a") const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest total degree first, then reverse-lexicographic exponents
    std::vector<std::pair<Exponents, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
      int dl = 0, dr = 0;
      for (auto k : l.first) dl += k;
      for (auto k : r.first) dr += k;
      if (dl != dr) return dl > dr;
      return l.first > r.first;
    });
    for (const auto& [e, c] : order) {
      bool neg = c < 0;
      Rational m = neg ? Rational(-c) : c;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (int k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += prefix + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        out += m.get_str();
      } else {
        if (m != 1) out += m.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw InvariantError("polynomial arity mismatch");
  }

  int nvars_;
  std::map<Exponents, Rational> terms_;
};

/// A square polynomial system together with its symbolic Jacobian.
struct PolySystem {
  std::vector<MultiPoly> equations;
  std::vector<std::vector<MultiPoly>> jacobian;  // [i][j] = d e_i / d x_j

  int size() const { return static_cast<int>(equations.size()); }
  int nvars() const { return equations.empty() ? 0 : equations.front().nvars(); }

  static PolySystem from_equations(std::vector<MultiPoly> eqs) {
    PolySystem s;
    s.equations = std::move(eqs);
    const int n = s.nvars();
    for (const auto& e : s.equations) {
      if (e.nvars() != n) throw InvariantError("system arity mismatch");
      std::vector<MultiPoly> row;
      for (int j = 0; j < n; ++j) row.push_back(e.derivative(j));
      s.jacobian.push_back(std::move(row));
    }
    return s;
  }

  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& e : equations) d.push_back(e.total_degree());
    return d;
  }
};

}  // namespace tors3
