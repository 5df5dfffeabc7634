#include "proshrink/solvers.hpp"

#include "proshrink/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace proshrink {

namespace {

constexpr double kDivergenceFactor = 1e6;
constexpr double kDivergenceFloor = 1e-10;

struct StepResolution {
  double h = 0;
  double sigma = 0;
  bool warning = false;
};

// max_safety caps the AUTO factor: the plain ascent tolerates any factor
// in (0, 2) but the momentum scheme can settle into a cycle past 1, so the
// accelerated solver resolves with the classical cap of 1.
StepResolution resolve_dual_step(const Matrix& A, double tau,
                                 const SolverConfig& cfg, double max_safety) {
  StepResolution out;
  if (cfg.h) {
    if (!(*cfg.h > 0))
      throw std::invalid_argument("solver: step size h must be > 0");
    out.h = *cfg.h;
    return out;
  }
  if (!(cfg.step_safety > 0 && cfg.step_safety < 2))
    throw std::invalid_argument("solver: step_safety must lie in (0, 2)");
  const SpectralEstimate est = spectral_norm(A);
  out.sigma = est.sigma;
  out.warning = !est.converged;
  const double bound = est.safe_upper();
  if (!(bound > 0))
    throw std::invalid_argument("solver: zero spectral estimate, cannot AUTO-step");
  out.h = std::min(cfg.step_safety, max_safety) / (tau * bound * bound);
  return out;
}

void check_config(const SolverConfig& cfg) {
  if (cfg.max_iter < 1)
    throw std::invalid_argument("solver: max_iter must be >= 1");
  if (!(cfg.theta0 > 0))
    throw std::invalid_argument("solver: theta0 must be > 0");
}

void endpoints(const BoxSet& X, Vector& lo, Vector& hi) {
  const long n = static_cast<long>(X.size());
  lo.resize(n);
  hi.resize(n);
  for (long i = 0; i < n; ++i) {
    lo[i] = X[static_cast<std::size_t>(i)].lower();
    hi[i] = X[static_cast<std::size_t>(i)].upper();
  }
}

[[noreturn]] void throw_nonfinite(const char* who, std::size_t iter) {
  throw std::runtime_error(std::string(who) + ": non-finite residual at iteration " +
                           std::to_string(iter) +
                           " (step size outside the stable range?)");
}

// Shared history/trace recording: the fixed point and dual value are
// evaluated at the post-update pair (x^k, y^k).
void record_row(const Problem& P, const Vector& lo, const Vector& hi,
                const Vector& x, const Vector& y, std::size_t iter, double rho,
                std::vector<HistoryRow>& rows) {
  Vector w = P.u + P.tau * (P.A.transpose() * y);
  Vector xh(w.size());
  for (long i = 0; i < w.size(); ++i)
    xh[i] = std::min(std::max(shrink_scaled(w[i], P.tau), lo[i]), hi[i]);
  HistoryRow row;
  row.iter = iter;
  row.primal_feas = rho;
  row.fixed_point = (x - xh).norm() / std::max(1.0, x.norm());
  row.dual_value = xh.lpNorm<1>() + (xh - P.u).squaredNorm() / (2.0 * P.tau) +
                   y.dot(P.b - P.A * xh);
  rows.push_back(row);
}

double fixed_point_residual(const Problem& P, const Vector& lo,
                            const Vector& hi, const Vector& x,
                            const Vector& y) {
  Vector w = P.u + P.tau * (P.A.transpose() * y);
  Vector xh(w.size());
  for (long i = 0; i < w.size(); ++i)
    xh[i] = std::min(std::max(shrink_scaled(w[i], P.tau), lo[i]), hi[i]);
  return (x - xh).norm() / std::max(1.0, x.norm());
}

}  // namespace

SolverResult proshrink_solve(const Problem& P, const SolverConfig& cfg,
                             const Vector* y0) {
  check_config(cfg);
  const StepResolution step = resolve_dual_step(P.A, P.tau, cfg, 2.0);
  const double h = step.h;
  const double tau = P.tau;
  const Matrix& A = P.A;
  const long m = A.rows();
  const long n = A.cols();

  Vector lo, hi;
  endpoints(P.X, lo, hi);
  const Vector u_over_tau = P.u / tau;
  const double bden = std::max(1.0, P.b.norm());

  Vector y = (y0 != nullptr) ? *y0 : Vector(Vector::Zero(m));
  if (y.size() != m)
    throw std::invalid_argument("proshrink: initial dual length must equal rows");
  Vector w(n), x(n), r(m);

  SolverResult out;
  out.step_h = h;
  out.sigma = step.sigma;
  out.sigma_warning = step.warning;

  double rho_first = 0;
  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    w.noalias() = A.transpose() * y;
    w += u_over_tau;
    for (long i = 0; i < n; ++i)
      x[i] = std::min(std::max(tau * shrink(w[i]), lo[i]), hi[i]);
    r = P.b;
    r.noalias() -= A * x;
    const double rho = r.norm() / bden;
    if (!std::isfinite(rho)) throw_nonfinite("proshrink", k);
    if (k == 1)
      rho_first = rho;
    else if (rho > kDivergenceFactor * std::max(rho_first, kDivergenceFloor))
      throw std::runtime_error(
          "proshrink: residual diverged at iteration " + std::to_string(k) +
          " (step size h likely exceeds 2/(tau*||A||^2))");
    y += h * r;

    out.iterations = k;
    if (cfg.record_history) record_row(P, lo, hi, x, y, k, rho, out.history);
    if (cfg.observer) cfg.observer(k, x, y);

    if (rho <= cfg.tol_feas &&
        (!cfg.tol_fp || fixed_point_residual(P, lo, hi, x, y) <= *cfg.tol_fp)) {
      out.termination = Termination::FeasTol;
      out.x = x;
      out.y = y;
      return out;
    }
  }
  out.termination = Termination::MaxIter;
  out.x = x;
  out.y = y;
  return out;
}

AccelCoefficients accel_recursion_step(double theta, bool theta_squared) {
  AccelCoefficients c;
  c.gamma = theta_squared ? (std::sqrt(theta * theta + 4.0) - theta) / 2.0
                          : (std::sqrt(theta + 4.0) - theta) / 2.0;
  c.beta = (1.0 - theta) * c.gamma;
  c.theta_next = theta * c.gamma;
  return c;
}

SolverResult proshrink_accelerated(const Problem& P, const SolverConfig& cfg) {
  check_config(cfg);
  const StepResolution step = resolve_dual_step(P.A, P.tau, cfg, 1.0);
  const double h = step.h;
  const double tau = P.tau;
  const Matrix& A = P.A;
  const long m = A.rows();
  const long n = A.cols();

  Vector lo, hi;
  endpoints(P.X, lo, hi);
  const Vector u_over_tau = P.u / tau;
  const double bden = std::max(1.0, P.b.norm());

  Vector y = Vector::Zero(m);
  Vector z = Vector::Zero(m);
  Vector w(n), x(n), r(m), z_new(m);
  double theta = cfg.theta0;

  SolverResult out;
  out.step_h = h;
  out.sigma = step.sigma;
  out.sigma_warning = step.warning;

  double rho_first = 0;
  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    w.noalias() = A.transpose() * y;
    w += u_over_tau;
    for (long i = 0; i < n; ++i)
      x[i] = std::min(std::max(tau * shrink(w[i]), lo[i]), hi[i]);
    r = P.b;
    r.noalias() -= A * x;
    const double rho = r.norm() / bden;
    if (!std::isfinite(rho)) throw_nonfinite("proshrink_accelerated", k);
    if (k == 1)
      rho_first = rho;
    else if (rho > kDivergenceFactor * std::max(rho_first, kDivergenceFloor))
      throw std::runtime_error(
          "proshrink_accelerated: residual diverged at iteration " +
          std::to_string(k) +
          " (check the step size and the gamma/beta/theta recursion)");

    z_new = y + h * r;
    if (cfg.restart && (z_new - z).dot(y - z) > 0) {
      theta = 1.0;  // drops the next momentum weight to zero
      y = z_new;
    } else {
      const AccelCoefficients c = accel_recursion_step(theta, cfg.theta_squared);
      y = z_new + c.beta * (z_new - z);
      theta = c.theta_next;
    }
    z = z_new;

    out.iterations = k;
    if (cfg.record_history) record_row(P, lo, hi, x, y, k, rho, out.history);
    if (cfg.observer) cfg.observer(k, x, y);

    if (rho <= cfg.tol_feas &&
        (!cfg.tol_fp || fixed_point_residual(P, lo, hi, x, y) <= *cfg.tol_fp)) {
      out.termination = Termination::FeasTol;
      out.x = x;
      out.y = y;
      return out;
    }
  }
  out.termination = Termination::MaxIter;
  out.x = x;
  out.y = y;
  return out;
}

SolverResult proximal_point_bp(const Matrix& A, const Vector& b,
                               const BoxSet& X, const OuterConfig& cfg) {
  for (double l : cfg.lambda_schedule)
    if (!(l > 0))
      throw std::invalid_argument("proximal_point_bp: lambda_k must be > 0");
  if (cfg.lambda_constant && !(*cfg.lambda_constant > 0))
    throw std::invalid_argument("proximal_point_bp: lambda must be > 0");
  const std::size_t outer_count = !cfg.lambda_schedule.empty()
                                      ? cfg.lambda_schedule.size()
                                      : cfg.max_outer;
  if (outer_count < 1)
    throw std::invalid_argument("proximal_point_bp: needs at least one outer step");

  Vector z = Vector::Zero(A.cols());
  Vector y_warm = Vector::Zero(A.rows());
  SolverResult result;
  std::size_t total_iterations = 0;
  std::size_t outer_steps = 0;
  bool converged = false;

  for (std::size_t k = 0; k < outer_count; ++k) {
    double lambda_k;
    if (!cfg.lambda_schedule.empty())
      lambda_k = cfg.lambda_schedule[k];
    else if (cfg.lambda_constant)
      lambda_k = *cfg.lambda_constant;
    else
      lambda_k = std::max(1.0, 10.0 * z.lpNorm<Eigen::Infinity>());

    Problem P(A, b, X, lambda_k, z);
    result = proshrink_solve(P, cfg.inner, &y_warm);
    y_warm = result.y;
    total_iterations += result.iterations;
    ++outer_steps;

    const double rel = (result.x - z).norm() / std::max(1.0, z.norm());
    z = result.x;
    if (rel <= cfg.outer_tol) {
      converged = true;
      break;
    }
  }
  result.iterations = total_iterations;
  result.outer_steps = outer_steps;
  result.termination = converged ? Termination::FeasTol : Termination::MaxIter;
  return result;
}

SolverResult fbs_box_bpdn(const Matrix& A, const Vector& b, const BoxSet& X,
                          double lambda, std::optional<double> gamma,
                          double tol, std::size_t max_iter, bool record_history,
                          double step_safety, const IterationObserver& observer) {
  if (!(lambda > 0))
    throw std::invalid_argument("fbs_box_bpdn: lambda must be > 0");
  if (max_iter < 1)
    throw std::invalid_argument("fbs_box_bpdn: max_iter must be >= 1");
  if (X.size() != static_cast<std::size_t>(A.cols()) || b.size() != A.rows())
    throw std::invalid_argument("fbs_box_bpdn: dimension mismatch");

  SolverResult out;
  double g_step;
  if (gamma) {
    if (!(*gamma > 0))
      throw std::invalid_argument("fbs_box_bpdn: gamma must be > 0");
    g_step = *gamma;
  } else {
    if (!(step_safety > 0 && step_safety < 2))
      throw std::invalid_argument("fbs_box_bpdn: step_safety must lie in (0, 2)");
    const SpectralEstimate est = spectral_norm(A);
    out.sigma = est.sigma;
    out.sigma_warning = !est.converged;
    const double bound = est.safe_upper();
    if (!(bound > 0))
      throw std::invalid_argument("fbs_box_bpdn: zero spectral estimate");
    g_step = step_safety * lambda / (bound * bound);
  }
  out.step_h = g_step;

  const long n = A.cols();
  Vector lo, hi;
  endpoints(X, lo, hi);
  const double bden = std::max(1.0, b.norm());

  Vector x = Vector::Zero(n);
  Vector res(A.rows()), grad(n), v(n), x_new(n);
  double rho_first = 0;
  for (std::size_t k = 1; k <= max_iter; ++k) {
    res.noalias() = A * x;
    res -= b;
    grad.noalias() = A.transpose() * res;
    v = x - (g_step / lambda) * grad;
    for (long i = 0; i < n; ++i)
      x_new[i] = std::min(std::max(shrink_scaled(v[i], g_step), lo[i]), hi[i]);
    const double delta = (x_new - x).norm() / std::max(1.0, x.norm());
    const double rho = res.norm() / bden;
    if (!std::isfinite(rho) || !std::isfinite(delta))
      throw_nonfinite("fbs_box_bpdn", k);
    if (k == 1)
      rho_first = rho;
    else if (rho > kDivergenceFactor * std::max(rho_first, kDivergenceFloor))
      throw std::runtime_error(
          "fbs_box_bpdn: residual diverged at iteration " + std::to_string(k) +
          " (step gamma likely exceeds 2*lambda/||A||^2)");
    x = x_new;

    out.iterations = k;
    if (record_history) {
      HistoryRow row;
      row.iter = k;
      row.primal_feas = rho;
      row.fixed_point = delta;
      row.dual_value = std::numeric_limits<double>::quiet_NaN();
      out.history.push_back(row);
    }
    if (observer) observer(k, x, Vector());

    if (delta <= tol) {
      out.termination = Termination::FeasTol;
      out.x = x;
      return out;
    }
  }
  out.termination = Termination::MaxIter;
  out.x = x;
  return out;
}

const std::vector<HistoryRow>& residual_trace(const SolverResult& result) {
  if (result.history.empty())
    throw std::logic_error("residual_trace: run did not record history");
  return result.history;
}

}  // namespace proshrink
