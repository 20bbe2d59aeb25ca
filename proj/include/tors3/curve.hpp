#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/rational.hpp"
#include "tors3/unipoly.hpp"

namespace tors3 {

/// Genus-3 hyperelliptic curve y^2 = f(x) with f monic of degree 7 or 8 over Q.
class HyperellipticCurve {
 public:
  /// `leading_first` lists the coefficients of f from x^d down to x^0.
  /// Throws InvariantError unless f is monic, of degree 7 or 8, and
  /// squarefree.
  explicit HyperellipticCurve(std::vector<Rational> leading_first, std::string label = {})
      : label_(std::move(label)) {
    if (leading_first.size() != 8 && leading_first.size() != 9)
      throw InvariantError("curve degree must be 7 or 8 (got " + std::to_string(int(leading_first.size()) - 1) + ")");
    if (leading_first.front() != 1) throw InvariantError("f must be monic");
    std::vector<Rational> c(leading_first.rbegin(), leading_first.rend());
    f_ = UniPoly(std::move(c), "x");
    if (!is_squarefree(f_)) throw InvariantError("f must be squarefree (resultant(f, f') = 0)");
  }

  int degree() const { return f_.degree(); }
  bool is_odd() const { return degree() == 7; }
  const UniPoly& f() const { return f_; }
  const std::string& label() const { return label_; }

  /// Coefficient a_i of x^i.
  Rational a(int i) const { return f_.coeff(i); }

  /// Coefficients from the leading one down to the constant.
  std::vector<Rational> leading_first() const {
    const auto& c = f_.coeffs();
    return {c.rbegin(), c.rend()};
  }

  Rational discriminant_resultant() const { return resultant(f_, f_.derivative()); }

 private:
  UniPoly f_;
  std::string label_;
};

}  // namespace tors3
