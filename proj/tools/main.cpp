// Command-line driver: solve problems from files, run recovery-rate sweeps,
// and run the operator identity self-test batteries.

#include <CLI11.hpp>
#include <json.hpp>

#include "proshrink/dual.hpp"
#include "proshrink/experiments.hpp"
#include "proshrink/io.hpp"
#include "proshrink/operators.hpp"
#include "proshrink/selfcheck.hpp"
#include "proshrink/solvers.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace proshrink;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMaxIter = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitRuntime = 4;

void save_manifest(const std::string& path, const json& manifest) {
  std::ofstream out(path);
  if (!out) throw io::ParseError(path, 0, "cannot open file for writing");
  out << manifest.dump(2) << "\n";
}

// "lo:hi", "lo:hi:step" or a comma list.
std::vector<std::size_t> parse_s_range(const std::string& text) {
  std::vector<std::size_t> out;
  const auto parse_count = [&](const std::string& tok) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--s-range", "malformed entry '" + tok + "'");
    }
    if (pos != tok.size() || v == 0)
      throw CLI::ValidationError("--s-range", "malformed entry '" + tok + "'");
    return static_cast<std::size_t>(v);
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 2 && parts.size() != 3)
      throw CLI::ValidationError("--s-range", "expected lo:hi[:step]");
    const std::size_t lo = parse_count(parts[0]);
    const std::size_t hi = parse_count(parts[1]);
    const std::size_t step = parts.size() == 3 ? parse_count(parts[2]) : 1;
    if (hi < lo) throw CLI::ValidationError("--s-range", "hi < lo");
    for (std::size_t s = lo; s <= hi; s += step) out.push_back(s);
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_count(tok));
  }
  if (out.empty()) throw CLI::ValidationError("--s-range", "empty range");
  return out;
}

std::pair<double, double> parse_box_literal(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--box", "expected 'lo,hi'");
  char* end = nullptr;
  const std::string lo_s = text.substr(0, comma);
  const std::string hi_s = text.substr(comma + 1);
  const double lo = std::strtod(lo_s.c_str(), &end);
  if (end == lo_s.c_str() || *end != '\0')
    throw CLI::ValidationError("--box", "malformed endpoint '" + lo_s + "'");
  const double hi = std::strtod(hi_s.c_str(), &end);
  if (end == hi_s.c_str() || *end != '\0')
    throw CLI::ValidationError("--box", "malformed endpoint '" + hi_s + "'");
  if (!(lo <= hi)) throw CLI::ValidationError("--box", "lo > hi");
  return {lo, hi};
}

struct SolveArgs {
  std::string matrix_path;
  std::string rhs_path;
  std::string box_path;
  std::string u_path;
  std::string solver = "proshrink";
  std::string out_path;
  double tau = 0;
  std::optional<double> h;
  double tol_feas = 1e-12;
  std::size_t max_iter = 50000;
  bool history = false;
};

int run_solve(const SolveArgs& args) {
  Matrix A = io::load_matrix_csv(args.matrix_path);
  Vector b = io::load_vector(args.rhs_path);
  BoxSet X = args.box_path.empty()
                 ? BoxSet::whole_line(static_cast<std::size_t>(A.cols()))
                 : io::load_box(args.box_path);
  Vector u;
  if (!args.u_path.empty()) u = io::load_vector(args.u_path);
  if ((args.solver == "ppbp" || args.solver == "fbs") && !args.u_path.empty())
    throw std::invalid_argument("--u applies only to proshrink/accel");

  SolverConfig cfg;
  cfg.h = args.h;
  cfg.tol_feas = args.tol_feas;
  cfg.max_iter = args.max_iter;
  cfg.record_history = args.history;

  // honor a manual step but warn when it exceeds the convergence bound
  if (args.h && args.solver != "fbs") {
    const SpectralEstimate est = spectral_norm(A);
    const double bound = 2.0 / (args.tau * est.sigma * est.sigma);
    if (*args.h > bound)
      std::cerr << "warning: --h " << *args.h
                << " exceeds the convergence bound 2/(tau*sigma^2) = " << bound
                << "; proceeding with the user override\n";
  }

  SolverResult result;
  if (args.solver == "proshrink") {
    result = proshrink::proshrink_solve(Problem(A, b, X, args.tau, u), cfg);
  } else if (args.solver == "accel") {
    result = proshrink_accelerated(Problem(A, b, X, args.tau, u), cfg);
  } else if (args.solver == "ppbp") {
    OuterConfig outer;
    outer.lambda_constant = args.tau;
    outer.inner = cfg;
    result = proximal_point_bp(A, b, X, outer);
  } else {  // fbs
    result = fbs_box_bpdn(A, b, X, args.tau, args.h, args.tol_feas,
                          args.max_iter, args.history);
  }

  io::save_vector(args.out_path, result.x);
  if (args.history)
    io::save_trace_csv(args.out_path + ".trace.csv", result.history);

  json manifest;
  manifest["artifact_version"] = kVersion;
  manifest["command"] = "solve";
  json params;
  params["matrix"] = args.matrix_path;
  params["rhs"] = args.rhs_path;
  params["box"] = args.box_path;
  params["u"] = args.u_path;
  params["tau"] = args.tau;
  params["solver"] = args.solver;
  if (args.h)
    params["h"] = *args.h;
  else
    params["h"] = "auto";
  params["tol_feas"] = args.tol_feas;
  params["max_iter"] = args.max_iter;
  params["history"] = args.history;
  params["out"] = args.out_path;
  manifest["parameters"] = params;
  json resolved;
  resolved["h"] = result.step_h;
  resolved["sigma"] = result.sigma;
  resolved["sigma_converged"] = !result.sigma_warning;
  resolved["iterations"] = result.iterations;
  resolved["termination"] =
      result.termination == Termination::FeasTol ? "FEAS_TOL" : "MAX_ITER";
  if (result.outer_steps > 0) resolved["outer_steps"] = result.outer_steps;
  manifest["resolved"] = resolved;
  save_manifest(args.out_path + ".manifest.json", manifest);

  if (result.termination == Termination::MaxIter) {
    std::cerr << "max_iter reached without meeting the tolerance\n";
    return kExitMaxIter;
  }
  return kExitOk;
}

struct SweepArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string s_range;
  std::size_t trials = 0;
  double tau = 10.0;
  std::string box = "-1,1";
  double tol_feas = 1e-14;
  std::size_t max_iter = 50000;
  std::uint64_t seed = 1;
  std::string out_path;
  bool paper_scale = false;
};

int run_sweep(SweepArgs args) {
  if (args.paper_scale) {
    args.m = 200;
    args.n = 400;
    args.s_range = "1:80";
    args.trials = 100;
    args.box = "-1,1";
    args.tau = 10.0;
  }
  if (args.m == 0 || args.n == 0 || args.trials == 0 || args.s_range.empty())
    throw std::invalid_argument(
        "sweep needs --m, --n, --s-range and --trials (or --paper-scale)");

  const std::vector<std::size_t> s_list = parse_s_range(args.s_range);
  const auto [lo, hi] = parse_box_literal(args.box);
  const BoxSet box = BoxSet::uniform(args.n, lo, hi);

  SolverConfig cfg;
  cfg.tol_feas = args.tol_feas;
  cfg.max_iter = args.max_iter;

  const SweepReport report =
      sweep(args.m, args.n, s_list, args.trials, args.tau, box, cfg, args.seed);
  io::save_sweep_csv(args.out_path, report);

  json manifest;
  manifest["artifact_version"] = kVersion;
  manifest["command"] = "sweep";
  json params;
  params["m"] = args.m;
  params["n"] = args.n;
  params["s_range"] = args.s_range;
  params["trials"] = args.trials;
  params["tau"] = args.tau;
  params["box"] = args.box;
  params["tol_feas"] = args.tol_feas;
  params["max_iter"] = args.max_iter;
  params["seed"] = args.seed;
  params["out"] = args.out_path;
  params["paper_scale"] = args.paper_scale;
  manifest["parameters"] = params;
  manifest["seed"] = args.seed;
  save_manifest(args.out_path + ".manifest.json", manifest);
  return kExitOk;
}

int run_check() {
  const auto results = selfcheck::run_all();
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok() ? "pass" : "FAIL") << "  " << r.name << ": checked "
              << r.checked << ", failed " << r.failed << "\n";
    if (!r.ok()) {
      ok = false;
      std::cout << "      first counterexample: " << r.first_counterexample
                << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projected shrinkage solvers for box-constrained l1 minimization"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  double solve_h = 0;
  CLI::App* solve = app.add_subcommand("solve", "solve a problem from files");
  solve->set_help_flag("--help", "print help");  // frees -h for the step size
  solve->add_option("--matrix", solve_args.matrix_path, "matrix CSV")->required();
  solve->add_option("--rhs", solve_args.rhs_path, "right-hand side")->required();
  solve->add_option("--box", solve_args.box_path,
                    "box file (default: unconstrained)");
  solve->add_option("--u", solve_args.u_path, "anchor vector (default: zero)");
  solve->add_option("--tau", solve_args.tau,
                    "augmentation weight (lambda for ppbp/fbs)")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--solver", solve_args.solver, "iteration scheme")
      ->check(CLI::IsMember({"proshrink", "accel", "ppbp", "fbs"}));
  CLI::Option* h_opt =
      solve->add_option("--h", solve_h, "manual step size (default: auto)");
  solve->add_option("--tol-feas", solve_args.tol_feas,
                    "relative feasibility tolerance");
  solve->add_option("--max-iter", solve_args.max_iter, "iteration cap");
  solve->add_flag("--history", solve_args.history, "write a residual trace");
  solve->add_option("--out", solve_args.out_path, "solution output path")
      ->required();

  SweepArgs sweep_args;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "recovery-rate sweep over sparsity levels");
  sweep_cmd->add_option("--m", sweep_args.m, "rows");
  sweep_cmd->add_option("--n", sweep_args.n, "columns");
  sweep_cmd->add_option("--s-range", sweep_args.s_range,
                        "sparsity levels, lo:hi[:step] or comma list");
  sweep_cmd->add_option("--trials", sweep_args.trials, "trials per level");
  sweep_cmd->add_option("--tau", sweep_args.tau, "augmentation weight");
  sweep_cmd->add_option("--box", sweep_args.box, "uniform box 'lo,hi'");
  sweep_cmd->add_option("--tol-feas", sweep_args.tol_feas,
                        "relative feasibility tolerance");
  sweep_cmd->add_option("--max-iter", sweep_args.max_iter, "iteration cap");
  sweep_cmd->add_option("--seed", sweep_args.seed, "base seed");
  sweep_cmd->add_option("--out", sweep_args.out_path, "report CSV path")
      ->required();
  sweep_cmd->add_flag("--paper-scale", sweep_args.paper_scale,
                      "preset: 200x400, s=1..80, 100 trials, box [-1,1], tau 10");

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the operator identity batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message (or help text)
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) {
      if (h_opt->count() > 0) solve_args.h = solve_h;
      return run_solve(solve_args);
    }
    if (sweep_cmd->parsed()) return run_sweep(sweep_args);
    if (check_cmd->parsed()) return run_check();
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitInput;
}
