#pragma once

#include "proshrink/linalg.hpp"
#include "proshrink/problem.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace proshrink {

// Primal-dual iterations for the anchored model and its relatives:
//
//   proshrink              x^{k+1} = [tau*shrink(u/tau + A^T y^k)]^+_X
//                          y^{k+1} = y^k + h*(b - A x^{k+1})
//
//   proshrink_accelerated  same primal step, dual step with momentum
//                          driven by the gamma/beta/theta recursion
//
//   proximal_point_bp      outer loop z^{k+1} <- argmin of the anchored
//                          model at (u=z^k, tau=lambda_k), solving the
//                          plain basis-pursuit model
//
//   fbs_box_bpdn           forward-backward splitting for the penalized
//                          model min_{x in X} ||x||_1 + (1/2l)*||Ax-b||^2
//
// Every primal iterate is the output of a projected shrinkage and so lies
// in X. The dual step size must satisfy h < 2/(tau*||A||^2) for the plain
// scheme to converge; AUTO picks h = step_safety/(tau*sigma^2) with sigma
// the inflated power-iteration estimate, so the bound holds strictly.

enum class Termination { FeasTol, MaxIter };

struct HistoryRow {
  std::size_t iter = 0;
  double primal_feas = 0;
  double fixed_point = 0;
  double dual_value = 0;
};

// Called once per iteration with the post-update pair (x^k, y^k).
using IterationObserver =
    std::function<void(std::size_t iter, const Vector& x, const Vector& y)>;

struct SolverConfig {
  std::optional<double> h;        // dual step size; empty = AUTO
  double step_safety = 1.9;       // AUTO: h = step_safety/(tau*sigma^2)
  double tol_feas = 1e-12;        // relative primal feasibility target
  std::optional<double> tol_fp;   // optional extra fixed-point target
  std::size_t max_iter = 50000;
  bool record_history = false;
  double theta0 = 1.0;            // accelerated scheme seed
  bool restart = false;           // gradient-restart heuristic (accel only)
  bool theta_squared = false;     // theta^2 under the radical (accel only)
  IterationObserver observer;     // diagnostics hook, may be empty
};

struct SolverResult {
  Vector x;
  Vector y;
  std::size_t iterations = 0;
  Termination termination = Termination::MaxIter;
  std::vector<HistoryRow> history;  // filled only when record_history

  // Resolved run parameters, for manifests and step-size warnings.
  double step_h = 0;
  double sigma = 0;          // spectral estimate used by AUTO (0 if manual h)
  bool sigma_warning = false;
  std::size_t outer_steps = 0;  // proximal-point outer iterations (else 0)
};

// One step of the momentum recursion:
//   gamma = (sqrt(theta + 4) - theta)/2        (printed form)
//   gamma = (sqrt(theta^2 + 4) - theta)/2      (theta_squared variant)
//   beta = (1 - theta)*gamma, theta_next = theta*gamma
struct AccelCoefficients {
  double gamma = 0;
  double beta = 0;
  double theta_next = 0;
};

AccelCoefficients accel_recursion_step(double theta, bool theta_squared = false);

// Dual gradient ascent in primal-dual form; y^0 = 0 unless y0 is given
// (the proximal-point outer loop warm-starts it). Throws std::runtime_error
// on a non-finite or diverging residual.
SolverResult proshrink_solve(const Problem& P, const SolverConfig& cfg,
                             const Vector* y0 = nullptr);

// Momentum variant; z^0 = y^0 = 0 and theta_0 = cfg.theta0. Its AUTO step
// caps the safety factor at 1 (momentum past 1/(tau*sigma^2) can settle
// into a cycle instead of converging); a manual h is taken as given.
SolverResult proshrink_accelerated(const Problem& P, const SolverConfig& cfg);

struct OuterConfig {
  std::vector<double> lambda_schedule;    // explicit lambda_k (sets the count)
  std::optional<double> lambda_constant;  // CONSTANT(lambda) for max_outer steps
  std::size_t max_outer = 20;
  double outer_tol = 1e-10;
  SolverConfig inner;
  // Neither schedule set: lambda_k = max(1, 10*||z^k||_inf).
};

// Proximal-point outer loop solving min ||x||_1 s.t. Ax = b, x in X.
// Returns the final inner result with iterations accumulated across outer
// steps; termination reflects the outer loop.
SolverResult proximal_point_bp(const Matrix& A, const Vector& b,
                               const BoxSet& X, const OuterConfig& cfg);

// Forward-backward splitting for min_{x in X} ||x||_1 + (1/2*lambda)*||Ax-b||^2.
// Each step is the prox of gamma*||.||_1 + indicator_X at the gradient point
// x - (gamma/lambda)*A^T(Ax - b). gamma empty = AUTO, step_safety*lambda/sigma^2.
// Terminates on the fixed-point residual ||x^{k+1}-x^k||/max(1,||x^k||) <= tol.
// The dual_value history column is not defined for this model and is NaN.
SolverResult fbs_box_bpdn(const Matrix& A, const Vector& b, const BoxSet& X,
                          double lambda, std::optional<double> gamma,
                          double tol, std::size_t max_iter,
                          bool record_history = false,
                          double step_safety = 1.0,
                          const IterationObserver& observer = {});

// The recorded per-iteration table. Throws std::logic_error when the run
// did not record history.
const std::vector<HistoryRow>& residual_trace(const SolverResult& result);

}  // namespace proshrink
