#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tors3/big.hpp"
#include "tors3/rational.hpp"
#include "tors3/scalar.hpp"

namespace tors3 {

/// Dense univariate polynomial over Q, coefficients stored constant-first.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x")
      : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static UniPoly from_integers(const std::vector<Integer>& coeffs, std::string var = "x") {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(c), std::move(var));
  }

  static UniPoly monomial(const Rational& a, int k, std::string var = "x") {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[k] = a;
    return UniPoly(std::move(c), std::move(var));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  bool is_integral() const {
    for (const auto& a : c_)
      if (a.get_den() != 1) return false;
    return true;
  }

  std::vector<Integer> integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(c_.size());
    for (const auto& a : c_) {
      if (a.get_den() != 1) throw InvariantError("polynomial has non-integral coefficients");
      out.push_back(a.get_num());
    }
    return out;
  }

  UniPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UniPoly(std::move(d), var_);
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> m = c_;
    Rational lc = leading();
    for (auto& a : m) a /= lc;
    return UniPoly(std::move(m), var_);
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UniPoly(std::move(c), a.var_);
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return UniPoly(std::move(c), a.var_);
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c), a.var_);
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw InvariantError("polynomial division by zero");
    std::vector<Rational> r = c_;
    int dq = degree() - d.degree();
    std::vector<Rational> q(dq >= 0 ? dq + 1 : 0);
    for (int k = dq; k >= 0; --k) {
      Rational t = r[k + d.degree()] / d.leading();
      q[k] = t;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= t * d.c_[j];
    }
    return {UniPoly(std::move(q), var_), UniPoly(std::move(r), var_)};
  }

  template <class S>
  S eval(const S& x, int digits) const {
    using T = ScalarTraits<S>;
    S acc = T::zero(digits);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T::from_rational(*it, digits);
    return acc;
  }

  /// Value at x in F_p; every denominator must be a unit mod p.
  long eval_mod(long x, long p) const {
    long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      __int128 v = static_cast<__int128>(acc) * x + rational_mod(*it, p);
      acc = static_cast<long>(v % p);
    }
    return acc;
  }

  /// Human-readable form, highest power first: "u^8 - 126*u^4 - 1323".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& a = c_[k];
      if (a == 0) continue;
      bool neg = a < 0;
      Rational m = neg ? Rational(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = (m == 1);
      if (!unit || k == 0) out += m.get_str();
      if (k > 0) {
        if (!unit) out += "*";
        out += var_;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
  std::string var_ = "x";
};

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Determinant of a square rational matrix by exact Gaussian elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Resultant via the Sylvester matrix.
inline Rational resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);
  return rational_det(std::move(s));
}

inline bool is_squarefree(const UniPoly& f) { return resultant(f, f.derivative()) != 0; }

}  // namespace tors3
