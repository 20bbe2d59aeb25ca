#pragma once

// Curves and published orbit data shared by the test suites.

#include <string>
#include <vector>

#include "tors3/curve.hpp"
#include "tors3/rational.hpp"
#include "tors3/evaluator.hpp"
#include "tors3/recon.hpp"
#include "tors3/scheme.hpp"

namespace tors3::fixtures {

inline std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// y^2 = x^8 + 8x^6 - 2x^4 + 8x^2 + 1 (X0(40))
inline HyperellipticCurve j040() { return HyperellipticCurve(ints({1, 0, 8, 0, -2, 0, 8, 0, 1}), "J0(40)"); }

/// y^2 = x^8 + 14x^7 + 79x^6 + 242x^5 + 441x^4 + 484x^3 + 316x^2 + 112x + 16 (X0(30))
inline HyperellipticCurve j030() {
  return HyperellipticCurve(ints({1, 14, 79, 242, 441, 484, 316, 112, 16}), "J0(30)");
}

/// y^2 = x^7 + x + 1
inline HyperellipticCurve odd_curve() { return HyperellipticCurve(ints({1, 0, 0, 0, 0, 0, 1, 1}), "x^7+x+1"); }

/// Published orbit: minimal polynomial of a1 (constant first) and, for
/// a1..a6, a numerator polynomial in u (constant first) over a denominator.
struct OrbitData {
  std::string name;
  std::vector<std::string> minpoly;
  std::vector<std::pair<std::vector<std::string>, std::string>> alphas;
};

inline std::vector<OrbitData> j040_orbits() {
  return {
      {"J0(40) orbit 1",
       {"12", "0", "-8", "0", "4", "0", "1"},
       {{{"0", "1"}, "1"},
        {{"1", "1"}, "1"},
        {{"-18", "-16", "0", "-1", "0", "-1"}, "9"},
        {{"-3", "-4", "0", "-1", "0", "-1"}, "3"},
        {{"6", "-1", "0", "-1", "0", "-1"}, "3"},
        {{"-9", "-7", "0", "-1", "0", "-1"}, "9"}}},
      {"J0(40) orbit 2",
       {"324", "-576", "256", "24", "4", "-6", "1"},
       {{{"0", "1"}, "1"},
        {{"126", "-124", "58", "4", "-1"}, "198"},
        {{"-468", "-322", "58", "4", "-1"}, "99"},
        {{"-765", "74", "58", "4", "-1"}, "99"},
        {{"-468", "173", "58", "4", "-1"}, "99"},
        {{"-522", "520", "-58", "-4", "1"}, "198"}}},
      {"J0(40) orbit 3",
       {"-1323", "0", "-648", "0", "-126", "0", "0", "0", "1"},
       {{{"0", "1"}, "1"},
        {{"-1"}, "1"},
        {{"0", "-648", "0", "-63", "0", "0", "0", "1"}, "189"},
        {{"3"}, "1"},
        {{"0", "-1"}, "1"},
        {{"1"}, "1"}}},
  };
}

inline std::vector<OrbitData> j030_orbits() {
  return {
      {"J0(30) orbit 1",
       {"2439", "-3381", "2296", "-861", "184", "-21", "1"},
       {{{"0", "1"}, "1"},
        {{"-2", "1"}, "1"},
        {{"-10638", "-3192", "-3962", "704", "-70", "4"}, "639"},
        {{"-7230", "5541", "-3962", "704", "-70", "4"}, "213"},
        {{"-8934", "8310", "-3962", "704", "-70", "4"}, "213"},
        {{"-10638", "9588", "-3962", "704", "-70", "4"}, "639"}}},
      {"J0(30) orbit 2",
       {"13925", "-39200", "45290", "-28147", "10414", "-2401", "343", "-28", "1"},
       {{{"0", "1"}, "1"},
        {{"-2", "2"}, "1"},
        {{"-54568", "113309", "-168882", "83312", "-24010", "4116", "-392", "16"}, "2169"},
        {{"-119258", "326392", "-337764", "166624", "-48020", "8232", "-784", "32"}, "723"},
        {{"-279004", "699056", "-675528", "333248", "-96040", "16464", "-1568", "64"}, "723"},
        {{"-592712", "1427032", "-1351056", "666496", "-192080", "32928", "-3136", "128"}, "2169"}}},
      {"J0(30) orbit 3",
       {"2224811", "-3689116", "2786294", "-1109723", "252436", "-33383", "2449", "-86", "1"},
       {{{"0", "1"}, "1"},
        {{"-11008190935547438114", "16027124735004738752", "-11087064205570838970", "3832952879194486442",
          "-674976608990629628", "60684703080638118", "-2417413903833052", "29876018790328"},
         "1214905376480298255"},
        {{"45446963859192685796", "-119961145357139022083", "77651266046887373580", "-28138121917331765018",
          "5069981080078429502", "-460287793516793082", "18363364083540328", "-226884728945872"},
         "1214905376480298255"},
        {{"60056349012914418458", "-111314232875845983914", "78911274653216131110", "-27907810187789236094",
          "4984082896579474376", "-451320054316335906", "17945665351388284", "-221239419854296"},
         "404968458826766085"},
        {{"198602211969557067116", "-339196464518479391108", "237313632893922545220", "-81156089944126098548",
          "14170047695264405192", "-1258524218508960012", "48868278713945128", "-593735119981072"},
         "1214905376480298255"},
        {{"14729053581484018328", "-23935267946866848320", "16418946803186159928", "-5498949927080657672",
          "944075033879118080", "-81787675076005272", "3004896812056480", "-35094171383296"},
         "242981075296059651"}}},
  };
}

/// The published orbit as a TorsionOrbit (no members).
inline TorsionOrbit to_orbit(const OrbitData& o) {
  TorsionOrbit t;
  std::vector<Rational> m;
  for (const auto& c : o.minpoly) m.push_back(parse_rational(c));
  t.minpoly = UniPoly(m, "u");
  for (int j = 2; j <= 6; ++j) {
    const auto& [num, den] = o.alphas[j - 1];
    Relation r;
    r.target = j;
    r.den = parse_integer(den);
    for (const auto& c : num) r.coeffs.push_back(parse_integer(c));
    r.coeffs.resize(t.minpoly.degree(), 0);
    t.relations[j - 2] = r;
  }
  return t;
}

/// The scheme point of `orbit` at the root u of its minimal polynomial:
/// a2..a6 from the relations, then a7..a10 from the top four equations,
/// each linear in its new unknown (value at 1 minus value at 0).
inline NumericSolution exact_point(const TorsionScheme& ts, const TorsionOrbit& orbit, const BigComplex& u, int digits) {
  NumericSolution s;
  s.coords.assign(kSchemeVars, BigComplex(digits));
  s.coords[0] = u.with_digits(digits);
  for (const auto& r : orbit.relations) s.coords[r->target - 1] = r->eval(u, digits);
  for (int k = 0; k < 4; ++k) {
    const int v = 6 + k;
    s.coords[v] = BigComplex(digits);
    BigComplex b = eval_multipoly(ts.equation(9 - k), s.coords, digits);
    s.coords[v] = BigComplex(Complex(1, 0), digits);
    BigComplex a = eval_multipoly(ts.equation(9 - k), s.coords, digits) - b;
    s.coords[v] = -b / a;
  }
  s.precision = digits;
  s.status = PathStatus::kConverged;
  return s;
}

/// All conjugate points of a published orbit.
inline std::vector<NumericSolution> orbit_points(const TorsionScheme& ts, const OrbitData& o, int digits) {
  TorsionOrbit t = to_orbit(o);
  std::vector<NumericSolution> out;
  for (const auto& u : polynomial_roots(t.minpoly, digits + 20)) out.push_back(exact_point(ts, t, u, digits));
  return out;
}

}  // namespace tors3::fixtures
