#include "maglap/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maglap/approximation.hpp"
#include "maglap/identities.hpp"
#include "maglap/report.hpp"

namespace maglap {

namespace {

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
  if (!out) throw std::invalid_argument("short write to " + path);
}

bool wants_json(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

SolveMethod parse_method(const std::string& name) {
  if (name == "direct") return SolveMethod::direct;
  if (name == "cg") return SolveMethod::cg;
  throw std::invalid_argument("unknown method (want direct|cg): " + name);
}

// Cells along y chosen so the mesh stays square on the problem's rectangle.
int matching_m(int n, const Rect& box) {
  const double ratio = (box.b2 - box.b1) / (box.a2 - box.a1);
  return std::max(1, static_cast<int>(std::lround(n * ratio)));
}

double rhs_l2_split(const ContinuumProblem& p) {
  auto re = [&p](double x, double y) { return p.rhs(x, y).real(); };
  auto im = [&p](double x, double y) { return p.rhs(x, y).imag(); };
  return l2_norm_function(re, p.domain) + l2_norm_function(im, p.domain);
}

struct SolveOptions {
  std::string problem;
  std::optional<Rect> domain;
  int n = 0;
  int m = 0;
  std::string method = "direct";
  double tol = 1e-10;
  int max_iterations = -1;  // -1: the solver default 10*N*M
};

// Config file: {"domain": {"a1","b1","a2","b2"}, "problem", "N", "M",
// "method", "tol", "max_iterations"}; every key optional, flags win.
SolveOptions load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  SolveOptions opt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("problem")) opt.problem = j.at("problem").get<std::string>();
    if (j.contains("domain")) {
      const nlohmann::json& d = j.at("domain");
      opt.domain = Rect{d.at("a1").get<double>(), d.at("b1").get<double>(),
                        d.at("a2").get<double>(), d.at("b2").get<double>()};
    }
    if (j.contains("N")) opt.n = j.at("N").get<int>();
    if (j.contains("M")) opt.m = j.at("M").get<int>();
    if (j.contains("method")) opt.method = j.at("method").get<std::string>();
    if (j.contains("tol")) opt.tol = j.at("tol").get<double>();
    if (j.contains("max_iterations")) {
      opt.max_iterations = j.at("max_iterations").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("bad config " + path + ": " + e.what());
  }
  return opt;
}

int run_identities(int n, int m, int trials, std::uint64_t seed,
                   const std::string& out) {
  const std::vector<IdentityResult> results =
      run_identity_suite(GridSpec::lattice(n, m), trials, seed);
  write_output(out, emit_identities_csv(results));
  for (const IdentityResult& r : results) {
    if (!r.pass()) {
      std::cerr << "identity " << r.name << " residual " << r.max_residual
                << " exceeds " << r.tolerance << '\n';
      return 2;
    }
  }
  return 0;
}

int run_solve(const SolveOptions& opt, const std::string& out) {
  if (opt.problem.empty()) {
    throw std::invalid_argument("solve needs --problem or a config naming one");
  }
  if (opt.n < 1) throw std::invalid_argument("solve needs --n >= 1");
  const ContinuumProblem p = opt.domain
                                 ? catalog_problem(opt.problem, *opt.domain)
                                 : catalog_problem(opt.problem);
  const int m = opt.m > 0 ? opt.m : matching_m(opt.n, p.domain);
  const GridSpec g(opt.n, m, p.domain);
  const SolveMethod method = parse_method(opt.method);

  auto [field, report] =
      solve_dirichlet_h(p, g, method, opt.tol, 4, opt.max_iterations);

  SolveSummary summary{
      p.name,
      g,
      opt.method,
      opt.tol,
      report.iterations,
      report.relative_residual,
      report.energy,
      p.has_exact() ? l2_error_vs(field, p.exact)
                    : std::numeric_limits<double>::quiet_NaN(),
      w_norm(report.solution),
      0.0,
      {report.solution.data().begin(), report.solution.data().end()}};
  summary.ratio_bound = summary.w_norm / rhs_l2_split(p);
  write_output(out, emit_solve_json(summary));
  return 0;
}

int run_spectrum(int n, int m, double a1x, double a2y,
                 const std::string& out) {
  const GridSpec g = GridSpec::lattice(n, m);
  const std::vector<double> values =
      spectrum(assemble(g, MagneticPotential::constant(g, a1x, a2y)));
  write_output(out, wants_json(out)
                        ? emit_spectrum_json(n, m, a1x, a2y, values)
                        : emit_spectrum_csv(values));
  return 0;
}

int run_convergence(const std::string& problem, const std::vector<int>& levels,
                    const std::string& method, double tol, bool parallel,
                    int max_iterations, const std::string& out) {
  const ContinuumProblem p = catalog_problem(problem);
  const StudyResult study = convergence_study(
      p, levels, parse_method(method), tol, parallel, 4, max_iterations);
  if (!study.rows.empty()) {
    write_output(out, wants_json(out)
                          ? emit_study_json(study.rows, problem, method)
                          : emit_study_csv(study.rows));
  }
  if (!study.complete) {
    std::cerr << "study aborted at level " << study.failed_level << ": "
              << study.error << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"discrete magnetic Laplacian toolkit"};
  app.require_subcommand(1);
  int status = 0;

  // identities
  int id_n = 8, id_m = 8, id_trials = 100;
  std::uint64_t id_seed = 0;
  std::string id_out;
  CLI::App* identities = app.add_subcommand(
      "identities", "run the seeded structural-identity suite");
  identities->add_option("--n", id_n, "cells along x")->check(CLI::PositiveNumber);
  identities->add_option("--m", id_m, "cells along y")->check(CLI::PositiveNumber);
  identities->add_option("--trials", id_trials, "random trials per identity")
      ->check(CLI::PositiveNumber);
  identities->add_option("--seed", id_seed, "rng seed");
  identities->add_option("--out", id_out, "output file (default stdout)");
  identities->callback(
      [&] { status = run_identities(id_n, id_m, id_trials, id_seed, id_out); });

  // solve
  SolveOptions flags;
  std::string config_path, solve_out;
  CLI::App* solve = app.add_subcommand(
      "solve", "solve one Dirichlet problem and dump the field as JSON");
  CLI::Option* o_problem =
      solve->add_option("--problem", flags.problem, "catalog problem name");
  solve->add_option("--config", config_path, "JSON config file");
  CLI::Option* o_n =
      solve->add_option("--n", flags.n, "cells along x")->check(CLI::PositiveNumber);
  CLI::Option* o_m =
      solve->add_option("--m", flags.m, "cells along y (default: square mesh)")
          ->check(CLI::PositiveNumber);
  CLI::Option* o_method =
      solve->add_option("--method", flags.method, "direct|cg");
  CLI::Option* o_tol = solve->add_option("--tol", flags.tol, "cg tolerance");
  CLI::Option* o_maxiter = solve->add_option(
      "--max-iterations", flags.max_iterations, "cg iteration cap");
  solve->add_option("--out", solve_out, "output file (default stdout)");
  solve->callback([&] {
    SolveOptions opt =
        config_path.empty() ? SolveOptions{} : load_config(config_path);
    if (o_problem->count()) opt.problem = flags.problem;
    if (o_n->count()) opt.n = flags.n;
    if (o_m->count()) opt.m = flags.m;
    if (o_method->count()) opt.method = flags.method;
    if (o_tol->count()) opt.tol = flags.tol;
    if (o_maxiter->count()) opt.max_iterations = flags.max_iterations;
    status = run_solve(opt, solve_out);
  });

  // spectrum
  int sp_n = 4, sp_m = 4;
  double sp_ax = 0, sp_ay = 0;
  std::string sp_out;
  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "eigenvalues of the lattice operator, constant potential");
  spectrum_cmd->add_option("--n", sp_n, "cells along x")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--m", sp_m, "cells along y")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--a1x", sp_ax, "constant dx component of A");
  spectrum_cmd->add_option("--a2y", sp_ay, "constant dy component of A");
  spectrum_cmd->add_option("--out", sp_out,
                           "output file, .json for JSON (default stdout CSV)");
  spectrum_cmd->callback(
      [&] { status = run_spectrum(sp_n, sp_m, sp_ax, sp_ay, sp_out); });

  // convergence
  std::string cv_problem, cv_method = "direct", cv_out;
  std::vector<int> cv_levels;
  double cv_tol = 1e-10;
  int cv_maxiter = -1;
  bool cv_parallel = false;
  CLI::App* convergence = app.add_subcommand(
      "convergence", "h-refinement study over increasing lattice sizes");
  convergence->add_option("--problem", cv_problem, "catalog problem name")
      ->required();
  convergence->add_option("--levels", cv_levels, "cells per side, e.g. 4,8,16")
      ->required()
      ->delimiter(',');
  convergence->add_option("--method", cv_method, "direct|cg");
  convergence->add_option("--tol", cv_tol, "cg tolerance");
  convergence->add_option("--max-iterations", cv_maxiter, "cg iteration cap");
  convergence->add_flag("--parallel", cv_parallel, "run levels concurrently");
  convergence->add_option("--out", cv_out,
                          "output file, .json for JSON (default stdout CSV)");
  convergence->callback([&] {
    status = run_convergence(cv_problem, cv_levels, cv_method, cv_tol,
                             cv_parallel, cv_maxiter, cv_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const SolveError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace maglap
