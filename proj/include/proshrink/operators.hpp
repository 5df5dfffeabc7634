#pragma once

#include "proshrink/boxset.hpp"
#include "proshrink/linalg.hpp"
#include "proshrink/problem.hpp"

namespace proshrink {

// Shrinkage (soft thresholding) and its box-projected form.
//
// The central identity implemented here: for a box X and tau > 0, projecting
// the tau-scaled shrinkage of v onto X coordinate-wise is exactly the
// proximal operator of tau*||.||_1 + indicator(X) at v. prox_oracle_1d is an
// independent exact evaluation of that prox used to verify the identity.

// Weight tau and box X defining the separable function
// tau*||x||_1 + indicator_X(x).
struct ProxSpec {
  double tau;
  BoxSet box;

  ProxSpec(double tau_in, BoxSet box_in);
};

// sign(s) * max(|s| - 1, 0); shrink(0) = 0 and shrink(+-1) = 0.
double shrink(double s);

// Coordinate-wise sign(v_i) * max(|v_i| - tau, 0), the prox of tau*|.|.
// Throws std::invalid_argument unless tau > 0.
Vector shrink_vec(const Vector& v, double tau);

// Scalar form of the above.
double shrink_scaled(double v, double tau);

// project_box(X, shrink_vec(v, tau)); equals the prox of
// tau*||.||_1 + indicator_X at v. Result always lies in X.
Vector projected_shrink(const Vector& v, const ProxSpec& spec);

// One-coordinate version: clamp(shrink_scaled(q, tau), I).
double projected_shrink_1d(const Interval& I, double tau, double q);

// Exact minimizer of tau*|t| + (1/2)*(t - q)^2 over I, found by evaluating
// the objective on the candidate set {lower, upper, q-tau, q+tau, 0} ∩ I.
// The objective is piecewise quadratic with its only breakpoint at 0 and
// unconstrained piece minimizers q-+tau, so the constrained minimizer is
// always in this set. Independent of projected_shrink by construction.
double prox_oracle_1d(const Interval& I, double tau, double q);

// clamp(q - sign_anchor(I), I), the sign-anchored form that equals
// clamp(shrink(q), I) on T1 intervals. Throws unless classify(I) == T1.
double sign_anchor_form(const Interval& I, double q);

struct OptimalityResidual {
  double primal_feas = 0;   // ||Ax - b|| / max(1, ||b||)
  double fixed_point = 0;   // ||x - prox(u + tau*A^T y)|| / max(1, ||x||)
};

// Both components vanish exactly at a primal-dual solution pair of the
// anchored model.
OptimalityResidual optimality_residual(const Problem& P, const Vector& x,
                                       const Vector& y);

}  // namespace proshrink
