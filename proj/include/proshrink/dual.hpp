#pragma once

#include "proshrink/linalg.hpp"
#include "proshrink/problem.hpp"

namespace proshrink {

// Lagrange dual of the anchored model: D(y) = min_{x in X} L(x, y) with
// L(x, y) = ||x||_1 + (1/2*tau)*||x - u||^2 + <y, b - Ax>. The inner
// minimizer is unique; gradient iterations on D are what the solvers run.

// x*(y), the unique Lagrangian minimizer: the projected shrinkage of
// u + tau*A^T y under (tau, X).
Vector primal_from_dual(const Problem& P, const Vector& y);

// D(y) = L(x*(y), y).
double dual_value(const Problem& P, const Vector& y);

// grad D(y) = b - A x*(y); zero exactly on the dual solution set.
Vector dual_gradient(const Problem& P, const Vector& y);

}  // namespace proshrink
