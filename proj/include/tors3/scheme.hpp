#pragma once

// The 3-torsion scheme of a genus-3 hyperelliptic Jacobian.
//
// Odd model (deg f = 7): a nonzero 3-torsion class is (1/3) div(h) with
//   h = y (x + a1) + a2 x^4 + a3 x^3 + a4 x^2 + a5 x + a6
// and the norm of h must be a cube:
//   f (x + a1)^2 + a7 (x^3 + a8 x^2 + a9 x + a10)^3 - (a2 x^4 + ... + a6)^2 = 0.
//
// Even model (deg f = 8): h = l(x) y + g(x) with l = x^2 + a1 x + a2 and
//   g = -x^6 + (-a7'/2 - a1) x^5 + (-a6'/2 + a7'^2/8 - a1 a7'/2 - a2) x^4
//       + a3 x^3 + a4 x^2 + a5 x + a6,
// (a6', a7' the x^6, x^7 coefficients of f), and
//   g^2 - l^2 f - a7 (x^3 + a8 x^2 + a9 x + a10)^3 = 0.
// With this g the x^10..x^12 coefficients of g^2 - l^2 f vanish identically.
//
// Either way the ten equations are the x^0..x^9 coefficients, e1 <-> x^0.

#include <string>
#include <vector>

#include "tors3/curve.hpp"
#include "tors3/error.hpp"
#include "tors3/multipoly.hpp"

namespace tors3 {

inline constexpr int kSchemeVars = 10;

enum class Parity { kOdd, kEven };

inline std::string to_string(Parity p) { return p == Parity::kOdd ? "odd" : "even"; }

struct TorsionScheme {
  HyperellipticCurve curve;
  Parity parity;
  PolySystem system;

  const std::vector<MultiPoly>& equations() const { return system.equations; }
  const MultiPoly& equation(int i) const { return system.equations.at(i); }
};

namespace detail {

/// Polynomial in x whose coefficients are polynomials in a1..a10.
using XPoly = std::vector<MultiPoly>;

inline MultiPoly alpha(int i) { return MultiPoly::variable(kSchemeVars, i - 1); }
inline MultiPoly cst(const Rational& c) { return MultiPoly::constant(kSchemeVars, c); }

inline XPoly xpoly_add(const XPoly& a, const XPoly& b, const Rational& sb = 1) {
  XPoly r(std::max(a.size(), b.size()), MultiPoly(kSchemeVars));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k] * sb;
  return r;
}

inline XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1, MultiPoly(kSchemeVars));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline XPoly xpoly_from_rationals(const UniPoly& f) {
  XPoly r;
  for (const auto& c : f.coeffs()) r.push_back(cst(c));
  return r;
}

/// a7 (x^3 + a8 x^2 + a9 x + a10)^3
inline XPoly cube_term() {
  XPoly cubic = {alpha(10), alpha(9), alpha(8), cst(1)};
  return xpoly_mul(XPoly{alpha(7)}, xpoly_mul(cubic, xpoly_mul(cubic, cubic)));
}

inline std::vector<MultiPoly> low_coefficients(const XPoly& p) {
  for (std::size_t k = 10; k < p.size(); ++k)
    if (!p[k].is_zero())
      throw InvariantError("scheme self-check failed: x^" + std::to_string(k) + " coefficient is not identically zero");
  std::vector<MultiPoly> eqs;
  for (std::size_t k = 0; k < 10; ++k) eqs.push_back(k < p.size() ? p[k] : MultiPoly(kSchemeVars));
  return eqs;
}

}  // namespace detail

/// g(x) of the even model, coefficients constant-first.
inline detail::XPoly even_model_g(const HyperellipticCurve& curve) {
  using namespace detail;
  const Rational a6 = curve.a(6), a7 = curve.a(7);
  const Rational half_a7 = a7 / 2;
  const Rational x4_const = -a6 / 2 + a7 * a7 / 8;
  return {alpha(6), alpha(5), alpha(4), alpha(3),
          cst(x4_const) - alpha(1) * half_a7 - alpha(2),
          cst(-half_a7) - alpha(1),
          cst(-1)};
}

/// g^2 - l^2 f for the even model, before truncation; exposed so the
/// cancellation of the x^10..x^12 coefficients can be checked directly.
inline detail::XPoly even_model_norm(const HyperellipticCurve& curve) {
  using namespace detail;
  XPoly g = even_model_g(curve);
  XPoly l = {alpha(2), alpha(1), cst(1)};
  XPoly f = xpoly_from_rationals(curve.f());
  return xpoly_add(xpoly_mul(g, g), xpoly_mul(xpoly_mul(l, l), f), Rational(-1));
}

inline TorsionScheme build_torsion_scheme(const HyperellipticCurve& curve) {
  using namespace detail;
  XPoly total;
  Parity parity;
  if (curve.is_odd()) {
    parity = Parity::kOdd;
    XPoly lin = {alpha(1), cst(1)};
    XPoly quartic = {alpha(6), alpha(5), alpha(4), alpha(3), alpha(2)};
    XPoly lhs = xpoly_mul(xpoly_from_rationals(curve.f()), xpoly_mul(lin, lin));
    total = xpoly_add(xpoly_add(lhs, cube_term()), xpoly_mul(quartic, quartic), Rational(-1));
  } else {
    parity = Parity::kEven;
    XPoly norm = even_model_norm(curve);
    for (std::size_t k = 10; k < norm.size(); ++k)
      if (!norm[k].is_zero())
        throw InvariantError("scheme self-check failed: x^" + std::to_string(k) +
                             " coefficient of g^2 - l^2 f is not identically zero");
    total = xpoly_add(norm, cube_term(), Rational(-1));
  }
  return TorsionScheme{curve, parity, PolySystem::from_equations(low_coefficients(total))};
}

/// Entry (i, j) is the formal partial derivative of e_i by a_j.
inline const std::vector<std::vector<MultiPoly>>& scheme_jacobian(const TorsionScheme& ts) {
  return ts.system.jacobian;
}

/// Rendering of the function h whose divisor is three times the torsion
/// divisor, for given coefficient texts a1..a6.
struct FunctionH {
  std::vector<std::string> alphas;
  std::string text;
};

namespace detail {

inline std::string render_rational_combo(const std::vector<std::pair<Rational, std::string>>& parts) {
  std::string out;
  for (const auto& [c, b] : parts) {
    if (c == 0) continue;
    bool neg = c < 0;
    Rational m = neg ? Rational(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (b.empty()) {
      out += m.get_str();
    } else {
      if (m != 1) out += m.get_str() + "*";
      out += b;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Canonical text of h. `alphas` holds the six coefficient texts; entries
/// that parse as rationals are folded in exactly, anything else (symbols,
/// decimal numbers) is kept as a factor.
inline FunctionH h_function(const HyperellipticCurve& curve, std::vector<std::string> alphas) {
  if (alphas.size() != 6) throw InvariantError("h_function needs exactly six coefficients");
  std::vector<std::pair<Rational, std::string>> exact;
  std::vector<std::string> bases;
  if (curve.is_odd()) {
    exact = {{1, "x*y"}};
    bases = {"y", "x^4", "x^3", "x^2", "x", ""};
  } else {
    const Rational a6 = curve.a(6), a7 = curve.a(7);
    exact = {{1, "x^2*y"}, {-1, "x^6"}, {-a7 / 2, "x^5"}, {-a6 / 2 + a7 * a7 / 8, "x^4"}};
    bases = {detail::render_rational_combo({{1, "x*y"}, {-1, "x^5"}, {-a7 / 2, "x^4"}}), "y - x^4", "x^3", "x^2", "x", ""};
  }

  auto compound = [](const std::string& b) { return b.find(' ') != std::string::npos; };
  std::vector<std::pair<bool, std::string>> rest;  // (negative, text)
  for (int i = 0; i < 6; ++i) {
    const std::string& b = bases[i];
    Rational q;
    bool is_rational = true;
    try {
      q = parse_rational(alphas[i]);
    } catch (const Error&) {
      is_rational = false;
    }
    if (!is_rational) {
      rest.push_back({false, b.empty() ? alphas[i] : alphas[i] + "*" + (compound(b) ? "(" + b + ")" : b)});
    } else if (q != 0 && !compound(b)) {
      exact.push_back({q, b});
    } else if (q != 0) {
      Rational m = q < 0 ? Rational(-q) : q;
      rest.push_back({q < 0, (m == 1 ? "" : m.get_str() + "*") + "(" + b + ")"});
    }
  }

  std::string out = detail::render_rational_combo(exact);
  if (out == "0" && !rest.empty()) out.clear();
  for (const auto& [neg, t] : rest) {
    if (out.empty())
      out = (neg ? "-" : "") + t;
    else
      out += (neg ? " - " : " + ") + t;
  }
  return FunctionH{std::move(alphas), out};
}

inline FunctionH h_function(const HyperellipticCurve& curve) {
  return h_function(curve, {"a1", "a2", "a3", "a4", "a5", "a6"});
}

}  // namespace tors3
