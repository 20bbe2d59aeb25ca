#pragma once

// Command-line front end: tors3 <scheme|solve|refine|reconstruct|verify|conductor|pipeline>.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tors3/conductor.hpp"
#include "tors3/io.hpp"
#include "tors3/parallel.hpp"
#include "tors3/recon.hpp"
#include "tors3/scheme.hpp"
#include "tors3/solver.hpp"
#include "tors3/verify.hpp"

namespace tors3::cli {

struct PipelineConfig {
  int digits = 1000;
  int steps = 200;
  std::uint64_t seed = 1;
  int dmax = 8;
  int kprime_offset = 50;
  int dedup_exp = 20;
  int primes = 3;
  int jobs = 0;
  /// Fraction of start paths to track (1 = all).
  double sample = 1.0;
  /// Residual certification exponent; 0 selects min(9 digits / 10, digits - 30).
  int tol_exp = 0;

  int residual_tol() const { return tol_exp > 0 ? tol_exp : std::min(9 * digits / 10, digits - 30); }

  void validate(bool reconstruction) const {
    if (digits < kDoubleDigits) throw InvariantError("digits must be >= 16");
    if (reconstruction && digits < 100) throw InvariantError("digits must be >= 100 for reconstruction");
    if (steps < 1) throw InvariantError("steps must be positive");
    if (dmax < 1) throw InvariantError("dmax must be positive");
    if (kprime_offset < 1) throw InvariantError("kprime offset must be positive");
    if (reconstruction && kprime_offset >= digits) throw InvariantError("kprime offset must be below digits");
    if (dedup_exp < 1) throw InvariantError("dedup exponent must be positive");
    if (primes < 1) throw InvariantError("primes must be positive");
    if (jobs < 0) throw InvariantError("jobs must be >= 0");
    if (!(sample > 0 && sample <= 1)) throw InvariantError("sample must lie in (0, 1]");
    if (tol_exp < 0) throw InvariantError("tol exponent must be >= 0");
  }

  TrackConfig track() const {
    TrackConfig t;
    t.steps = steps;
    t.seed = seed;
    t.target_digits = digits;
    t.dedup_exponent = dedup_exp;
    t.jobs = jobs;
    return t;
  }

  ReconConfig recon() const { return {digits, dmax, kprime_offset}; }
};

inline io::Json to_json(const PipelineConfig& c) {
  return {{"digits", c.digits},     {"steps", c.steps},         {"seed", c.seed},
          {"dmax", c.dmax},         {"kprime_offset", c.kprime_offset}, {"dedup_exp", c.dedup_exp},
          {"primes", c.primes},     {"sample", c.sample},       {"tol_exp", c.residual_tol()}};
}

/// Start-path indices: all of them, or a seeded Bernoulli sample.
inline std::vector<std::uint64_t> sample_paths(const StartSystem& ss, double fraction, std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  if (fraction >= 1) return out;  // empty means all
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  std::bernoulli_distribution pick(fraction);
  for (std::uint64_t i = 0; i < ss.root_count(); ++i)
    if (pick(rng)) out.push_back(i);
  if (out.empty()) out.push_back(0);
  return out;
}

inline std::vector<NumericSolution> solve(const TorsionScheme& ts, const PipelineConfig& cfg) {
  const auto ss = make_start_system(ts, cfg.seed);
  return solve_paths(ts.system, ss, sample_paths(ss, cfg.sample, cfg.seed), cfg.track());
}

inline std::vector<NumericSolution> converged_only(const std::vector<NumericSolution>& sols) {
  std::vector<NumericSolution> out;
  for (const auto& s : sols)
    if (s.converged()) out.push_back(s);
  return out;
}

/// Refines every converged solution to `cfg.digits`, then re-sorts and
/// re-deduplicates.
inline std::vector<NumericSolution> refine_all(const TorsionScheme& ts, std::vector<NumericSolution> sols,
                                               const PipelineConfig& cfg) {
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (sols[i].converged()) todo.push_back(i);
  const int workers = std::max(1, std::min<int>(resolve_jobs(cfg.jobs), static_cast<int>(todo.size())));
  std::vector<std::optional<Refiner>> refiners(workers);
  parallel_for(todo.size(), workers, [&](std::size_t k, int w) {
    if (!refiners[w]) refiners[w].emplace(ts.system);
    auto& s = sols[todo[k]];
    auto r = refiners[w]->refine(s, cfg.digits, cfg.track().refine_max_iter);
    r.path = s.path;
    s = std::move(r);
  });
  canonical_sort(sols);
  mark_duplicates(sols, cfg.dedup_exp);
  return sols;
}

namespace detail {

inline void emit(const std::string& path, const io::Json& j, std::ostream& out) {
  if (path.empty()) out << io::dump(j);
  else io::write_text(path, io::dump(j));
}

inline void add_config_flags(CLI::App* sub, PipelineConfig& c, bool tracking, bool recon, bool checks) {
  sub->add_option("--digits", c.digits, "working precision in decimal digits")->capture_default_str();
  sub->add_option("--dedup-exp", c.dedup_exp, "solutions closer than 10^-e are duplicates")->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads (0 = hardware)")->capture_default_str();
  if (tracking) {
    sub->add_option("--steps", c.steps, "homotopy steps N")->capture_default_str();
    sub->add_option("--seed", c.seed, "random seed for the gammas")->capture_default_str();
    sub->add_option("--sample", c.sample, "fraction of start paths to track")->capture_default_str();
  }
  if (recon) {
    sub->add_option("--dmax", c.dmax, "largest minimal polynomial degree tried")->capture_default_str();
    sub->add_option("--kprime-offset", c.kprime_offset, "k - k' for lattice scaling")->capture_default_str();
  }
  if (checks) {
    sub->add_option("--primes", c.primes, "primes per orbit for modular checks")->capture_default_str();
    sub->add_option("--tol-exp", c.tol_exp, "residual bound 10^-e (0 = from digits)");
  }
}

}  // namespace detail

/// Runs the CLI; returns the process exit code. Diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"3-torsion of genus-3 hyperelliptic Jacobians"};
  app.require_subcommand(1);
  PipelineConfig cfg;
  std::string curve_path, in_path, out_path, orbits_path;

  auto* scheme = app.add_subcommand("scheme", "build the 10-equation torsion scheme");
  auto* solve_cmd = app.add_subcommand("solve", "homotopy continuation plus Newton refinement");
  auto* refine = app.add_subcommand("refine", "refine solutions to --digits");
  auto* recon = app.add_subcommand("reconstruct", "minimal polynomials and relations by lattice reduction");
  auto* verify = app.add_subcommand("verify", "residual, modular, census and negation checks");
  auto* conductor = app.add_subcommand("conductor", "wild conductor exponent from a ramification filtration");
  auto* pipeline = app.add_subcommand("pipeline", "scheme, solve, reconstruct and verify");

  for (auto* s : {scheme, solve_cmd, refine, verify, pipeline})
    s->add_option("--curve", curve_path, "curve JSON")->required()->check(CLI::ExistingFile);
  for (auto* s : {refine, recon, verify, conductor})
    s->add_option("--in", in_path, "input JSON")->required()->check(CLI::ExistingFile);
  for (auto* s : {scheme, solve_cmd, refine, recon, verify, conductor, pipeline})
    s->add_option("--out", out_path, "output file (default stdout)");
  verify->add_option("--orbits", orbits_path, "reconstruction JSON (default: reconstruct)")->check(CLI::ExistingFile);

  detail::add_config_flags(solve_cmd, cfg, true, false, false);
  detail::add_config_flags(refine, cfg, false, false, false);
  detail::add_config_flags(recon, cfg, false, true, false);
  detail::add_config_flags(verify, cfg, false, true, true);
  detail::add_config_flags(pipeline, cfg, true, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*conductor) {
      const auto f = io::filtration_from_json(io::read_file(in_path));
      const std::string value = to_string(wild_exponent(f));
      if (out_path.empty()) out << value << "\n";
      else io::write_text(out_path, value + "\n");
      return 0;
    }
    if (*recon) {
      cfg.validate(true);
      auto sols = io::solutions_from_json(io::read_file(in_path));
      detail::emit(out_path, io::to_json(reconstruct_orbits(sols, cfg.recon())), out);
      return 0;
    }

    const auto curve = io::curve_from_json(io::read_file(curve_path));
    const bool needs_recon = *verify || *pipeline;
    cfg.validate(needs_recon);
    const auto ts = build_torsion_scheme(curve);

    if (*scheme) {
      detail::emit(out_path, io::to_json(ts), out);
      return 0;
    }
    if (*solve_cmd) {
      auto sols = solve(ts, cfg);
      detail::emit(out_path, io::solutions_to_json(sols, count_statuses(sols)), out);
      return 0;
    }
    if (*refine) {
      auto sols = refine_all(ts, io::solutions_from_json(io::read_file(in_path)), cfg);
      detail::emit(out_path, io::solutions_to_json(sols, count_statuses(sols)), out);
      return 0;
    }
    if (*verify) {
      auto sols = converged_only(io::solutions_from_json(io::read_file(in_path)));
      const Reconstruction rec = orbits_path.empty() ? reconstruct_orbits(sols, cfg.recon())
                                                     : io::reconstruction_from_json(io::read_file(orbits_path));
      const auto report = verify_all(ts, sols, rec, cfg.residual_tol(), cfg.primes, cfg.dedup_exp);
      detail::emit(out_path, io::to_json(report), out);
      return report.pass() ? 0 : 1;
    }
    // pipeline
    const auto all = solve(ts, cfg);
    const auto counts = count_statuses(all);
    const auto sols = converged_only(all);
    const auto rec = reconstruct_orbits(sols, cfg.recon());
    const auto report = verify_all(ts, sols, rec, cfg.residual_tol(), cfg.primes, cfg.dedup_exp);
    io::Json j;
    j["curve"] = io::to_json(curve);
    j["parity"] = to_string(ts.parity);
    j["config"] = to_json(cfg);
    j["counts"] = io::to_json(counts);
    j["reconstruction"] = io::to_json(rec);
    j["report"] = io::to_json(report);
    detail::emit(out_path, j, out);
    return report.pass() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tors3::cli
