#pragma once

#include "proshrink/boxset.hpp"
#include "proshrink/linalg.hpp"

#include <cstddef>

namespace proshrink {

// The augmented, anchored, box-constrained l1 model
//
//   min_x ||x||_1 + (1/2*tau)*||x - u||_2^2   s.t.  A x = b,  x in X,
//
// with A m-by-n, b in R^m, X a product of n intervals, tau > 0 and anchor
// u in R^n. Feasibility of {Ax=b} intersected with X is assumed, not checked.
struct Problem {
  Matrix A;
  Vector b;
  BoxSet X;
  double tau;
  Vector u;

  // An empty u means the zero anchor. Throws std::invalid_argument on any
  // dimension mismatch or tau <= 0.
  Problem(Matrix A_in, Vector b_in, BoxSet X_in, double tau_in,
          Vector u_in = Vector());

  std::size_t rows() const { return static_cast<std::size_t>(A.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(A.cols()); }
};

}  // namespace proshrink
