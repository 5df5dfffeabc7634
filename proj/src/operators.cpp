#include "proshrink/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace proshrink {

ProxSpec::ProxSpec(double tau_in, BoxSet box_in)
    : tau(tau_in), box(std::move(box_in)) {
  if (!(tau > 0)) throw std::invalid_argument("ProxSpec: tau must be > 0");
}

double shrink(double s) {
  const double a = std::abs(s) - 1.0;
  return a > 0 ? std::copysign(a, s) : 0.0;
}

double shrink_scaled(double v, double tau) {
  const double a = std::abs(v) - tau;
  return a > 0 ? std::copysign(a, v) : 0.0;
}

Vector shrink_vec(const Vector& v, double tau) {
  if (!(tau > 0)) throw std::invalid_argument("shrink_vec: tau must be > 0");
  Vector out(v.size());
  for (long i = 0; i < v.size(); ++i) out[i] = shrink_scaled(v[i], tau);
  return out;
}

Vector projected_shrink(const Vector& v, const ProxSpec& spec) {
  return project_box(spec.box, shrink_vec(v, spec.tau));
}

double projected_shrink_1d(const Interval& I, double tau, double q) {
  if (!(tau > 0))
    throw std::invalid_argument("projected_shrink_1d: tau must be > 0");
  return project_interval(I, shrink_scaled(q, tau));
}

double prox_oracle_1d(const Interval& I, double tau, double q) {
  if (!(tau > 0)) throw std::invalid_argument("prox_oracle_1d: tau must be > 0");
  // Objective evaluated in extended precision so candidate comparisons are
  // decided by the exact objective, not double rounding.
  const auto objective = [&](double t) -> long double {
    const long double tl = t;
    const long double d = tl - static_cast<long double>(q);
    return static_cast<long double>(tau) * std::abs(tl) + 0.5L * d * d;
  };
  const double candidates[5] = {I.lower(), I.upper(), q - tau, q + tau, 0.0};
  bool have = false;
  double best_t = 0;
  long double best_f = 0;
  for (double t : candidates) {
    if (!std::isfinite(t)) continue;
    if (t < I.lower() || t > I.upper()) continue;
    const long double f = objective(t);
    if (!have || f < best_f) {
      have = true;
      best_t = t;
      best_f = f;
    }
  }
  if (!have)
    throw std::logic_error("prox_oracle_1d: empty candidate set");  // unreachable
  return best_t;
}

double sign_anchor_form(const Interval& I, double q) {
  return project_interval(I, q - sign_anchor(I));
}

OptimalityResidual optimality_residual(const Problem& P, const Vector& x,
                                       const Vector& y) {
  if (x.size() != P.A.cols() || y.size() != P.A.rows())
    throw std::invalid_argument("optimality_residual: dimension mismatch");
  OptimalityResidual r;
  r.primal_feas = (P.A * x - P.b).norm() / std::max(1.0, P.b.norm());
  const Vector xhat =
      projected_shrink(P.u + P.tau * (P.A.transpose() * y), ProxSpec(P.tau, P.X));
  r.fixed_point = (x - xhat).norm() / std::max(1.0, x.norm());
  return r;
}

}  // namespace proshrink
