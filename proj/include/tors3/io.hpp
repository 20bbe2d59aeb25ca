#pragma once

// JSON forms of curves, schemes, solutions, orbits, reports and
// ramification filtrations. Exact numbers and extended-precision values are
// written as decimal strings.

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tors3/conductor.hpp"
#include "tors3/curve.hpp"
#include "tors3/recon.hpp"
#include "tors3/scheme.hpp"
#include "tors3/solver.hpp"
#include "tors3/verify.hpp"

namespace tors3::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvariantError(std::string("missing field '") + key + "'");
  return j.at(key);
}

/// Accepts a JSON string or integer.
inline Rational rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InvariantError("expected a rational string, got " + j.dump());
}

inline Integer integer(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump());
  throw InvariantError("expected an integer, got " + j.dump());
}

inline Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace detail

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvariantError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvariantError("cannot write '" + path + "'");
  out << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Curve: {"degree": 8, "coeffs": ["1", ...]} leading coefficient first.

inline Json to_json(const HyperellipticCurve& c) {
  Json j;
  if (!c.label().empty()) j["label"] = c.label();
  j["degree"] = c.degree();
  Json cs = Json::array();
  for (const auto& q : c.leading_first()) cs.push_back(to_string(q));
  j["coeffs"] = cs;
  return j;
}

inline HyperellipticCurve curve_from_json(const Json& j) {
  const Json& cs = detail::field(j, "coeffs");
  if (!cs.is_array()) throw InvariantError("curve coeffs must be an array");
  std::vector<Rational> c;
  for (const auto& x : cs) c.push_back(detail::rational(x));
  if (j.contains("degree") && j.at("degree").get<int>() + 1 != static_cast<int>(c.size()))
    throw InvariantError("curve degree does not match the number of coefficients");
  return HyperellipticCurve(std::move(c), j.value("label", std::string{}));
}

// ---------------------------------------------------------------------------
// Scheme: {curve, parity, equations}; equation i (x^i coefficient) is a list
// of terms {"coeff": "p/q", "exps": [e1..e10]} in ascending exponent order.

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", to_string(c)}, {"exps", e}});
  return terms;
}

inline MultiPoly multipoly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw InvariantError("equation must be a list of terms");
  MultiPoly p(nvars);
  for (const auto& t : j) {
    Exponents e = detail::field(t, "exps").get<Exponents>();
    p.add_term(e, detail::rational(detail::field(t, "coeff")));
  }
  return p;
}

inline Json to_json(const TorsionScheme& ts) {
  Json eqs = Json::array();
  for (const auto& e : ts.equations()) eqs.push_back(to_json(e));
  return {{"curve", to_json(ts.curve)}, {"parity", to_string(ts.parity)}, {"equations", eqs}};
}

// ---------------------------------------------------------------------------
// Solutions: {"counts": {...}, "solutions": [{status, precision,
// residual_exp, path, coords: [[re, im], ...]}]}.

inline Json to_json(const NumericSolution& s) {
  Json coords = Json::array();
  for (const auto& c : s.coords) coords.push_back({c.re.to_string(), c.im.to_string()});
  return {{"status", to_string(s.status)},
          {"precision", s.precision},
          {"residual_exp", detail::finite_or_null(s.residual_exp)},
          {"path", s.path},
          {"coords", coords}};
}

inline NumericSolution solution_from_json(const Json& j) {
  NumericSolution s;
  s.status = parse_path_status(detail::field(j, "status").get<std::string>());
  s.precision = detail::field(j, "precision").get<int>();
  if (s.precision < kDoubleDigits) throw InvariantError("solution precision must be >= 16");
  const Json& r = detail::field(j, "residual_exp");
  s.residual_exp = r.is_null() ? -INFINITY : r.get<double>();
  s.path = j.value("path", std::uint64_t{0});
  const Json& cs = detail::field(j, "coords");
  if (!cs.is_array() || cs.size() != kSchemeVars) throw InvariantError("solution must have 10 coordinates");
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) throw InvariantError("coordinate must be [re, im]");
    s.coords.emplace_back(BigReal::parse(c[0].get<std::string>(), s.precision),
                          BigReal::parse(c[1].get<std::string>(), s.precision));
  }
  return s;
}

inline Json to_json(const SolveCounts& c) {
  return {{"converged", c.converged}, {"duplicate", c.duplicate}, {"diverged", c.diverged}, {"singular", c.singular}};
}

/// Writes the converged solutions; `counts` summarises the whole solve.
inline Json solutions_to_json(const std::vector<NumericSolution>& sols, const SolveCounts& counts) {
  Json list = Json::array();
  for (const auto& s : sols)
    if (s.converged()) list.push_back(to_json(s));
  return {{"counts", to_json(counts)}, {"solutions", list}};
}

/// Accepts either the object form or a bare list of solutions.
inline std::vector<NumericSolution> solutions_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : detail::field(j, "solutions");
  if (!list.is_array()) throw InvariantError("solutions must be a list");
  std::vector<NumericSolution> out;
  for (const auto& s : list) out.push_back(solution_from_json(s));
  return out;
}

// ---------------------------------------------------------------------------
// Orbits: {minpoly: [leading..constant], relations: {alpha2: {den, coeffs:
// [b0..]}, ...}, size, members, consistent}.

inline Json to_json(const TorsionOrbit& o) {
  Json mp = Json::array();
  for (int i = o.degree(); i >= 0; --i) mp.push_back(to_string(o.minpoly.coeff(i).get_num()));
  Json rel = Json::object();
  for (const auto& r : o.relations) {
    if (!r) continue;
    Json cs = Json::array();
    for (const auto& b : r->coeffs) cs.push_back(to_string(b));
    rel["alpha" + std::to_string(r->target)] = {{"den", to_string(r->den)}, {"coeffs", cs}};
  }
  return {{"minpoly", mp},
          {"relations", rel},
          {"size", o.size()},
          {"members", o.members},
          {"consistent", o.consistent}};
}

inline TorsionOrbit orbit_from_json(const Json& j) {
  TorsionOrbit o;
  const Json& mp = detail::field(j, "minpoly");
  if (!mp.is_array() || mp.size() < 2) throw InvariantError("minpoly must have degree >= 1");
  std::vector<Rational> c;
  for (auto it = mp.rbegin(); it != mp.rend(); ++it) c.emplace_back(detail::integer(*it));
  o.minpoly = UniPoly(std::move(c), "u");
  if (o.minpoly.leading() == 0) throw InvariantError("minpoly leading coefficient is zero");
  const Json& rel = detail::field(j, "relations");
  for (int t = 2; t <= 6; ++t) {
    const std::string key = "alpha" + std::to_string(t);
    if (!rel.contains(key)) continue;
    Relation r;
    r.target = t;
    r.den = detail::integer(detail::field(rel.at(key), "den"));
    if (r.den <= 0) throw InvariantError(key + " denominator must be positive");
    for (const auto& b : detail::field(rel.at(key), "coeffs")) r.coeffs.push_back(detail::integer(b));
    o.relations[t - 2] = std::move(r);
  }
  if (j.contains("members")) o.members = j.at("members").get<std::vector<std::size_t>>();
  o.consistent = j.value("consistent", true);
  return o;
}

inline Json to_json(const Reconstruction& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits) orbits.push_back(to_json(o));
  return {{"orbits", orbits}, {"unresolved", r.unresolved}};
}

inline Reconstruction reconstruction_from_json(const Json& j) {
  Reconstruction r;
  for (const auto& o : detail::field(j, "orbits")) r.orbits.push_back(orbit_from_json(o));
  if (j.contains("unresolved")) r.unresolved = j.at("unresolved").get<std::vector<std::size_t>>();
  return r;
}

// ---------------------------------------------------------------------------
// Verification report.

inline Json to_json(const ModularCheck& c) {
  return {{"prime", c.prime}, {"roots_tested", c.roots_tested}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}};
}

inline Json to_json(const VerificationReport& r) {
  Json exps = Json::array();
  double worst = -INFINITY;
  for (double e : r.residuals.residual_exps) {
    exps.push_back(detail::finite_or_null(e));
    worst = std::max(worst, e);
  }
  Json out;
  out["pass"] = r.pass();
  out["residuals"] = {{"pass", r.residuals.pass},
                      {"tol_exp", r.residuals.tol_exp},
                      {"max_residual_exp", detail::finite_or_null(worst)},
                      {"residual_exps", exps}};
  out["census"] = {{"pass", r.census.pass()},
                   {"total", r.census.total},
                   {"expected", r.census.expected},
                   {"total_matches", r.census.total_matches()},
                   {"orbit_sizes", r.census.orbit_sizes},
                   {"orbit_sum", r.census.orbit_sum},
                   {"unresolved", r.census.unresolved},
                   {"sums_consistent", r.census.sums_consistent()}};
  Json orbits = Json::array();
  for (const auto& o : r.orbit_checks) {
    Json checks = Json::array();
    for (const auto& c : o.checks) checks.push_back(to_json(c));
    orbits.push_back({{"orbit", o.orbit}, {"pass", o.pass()}, {"checks", checks}});
  }
  out["modular"] = orbits;
  if (r.negation) out["negation_closure"] = {{"pass", r.negation->pass}, {"unmatched", r.negation->unmatched}};
  return out;
}

// ---------------------------------------------------------------------------
// Filtration: {"groups": [{"order": 24, "fixed_dim": 2} | {"order": 2,
// "generators": [[[...6 rows...]], ...]}]}.

inline RamificationFiltration filtration_from_json(const Json& j) {
  RamificationFiltration f;
  const Json& groups = detail::field(j, "groups");
  if (!groups.is_array()) throw InvariantError("groups must be a list");
  for (const auto& g : groups) {
    RamificationGroup rg;
    rg.order = detail::field(g, "order").get<long>();
    const bool has_gens = g.contains("generators"), has_dim = g.contains("fixed_dim");
    if (has_gens == has_dim) throw InvariantError("each group needs exactly one of fixed_dim or generators");
    if (has_gens) {
      GaloisAction a;
      for (const auto& m : g.at("generators")) a.generators.push_back(m.get<F3Matrix>());
      rg.action = std::move(a);
    } else {
      rg.fixed_dim = g.at("fixed_dim").get<int>();
    }
    f.groups.push_back(std::move(rg));
  }
  normalize(f);
  return f;
}

}  // namespace tors3::io
