#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>

namespace proshrink {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A*x with an explicit dimension check. Throws std::invalid_argument.
Vector matvec(const Matrix& A, const Vector& x);

// A^T*y with an explicit dimension check. Throws std::invalid_argument.
Vector rmatvec(const Matrix& A, const Vector& y);

struct Norms {
  double l1 = 0;
  double l2 = 0;
  double linf = 0;
};

Norms norms(const Vector& x);

// Largest-singular-value estimate from power iteration on the Gram matrix.
//
// The Rayleigh-quotient estimate never exceeds the true operator norm, so
// callers that need a strict upper bound (the dual step-size rule) must use
// safe_upper() instead of sigma.
struct SpectralEstimate {
  double sigma = 0;            // estimate, sigma <= ||A||_2
  double tol = 0;              // relative-change tolerance the run used
  std::size_t iterations = 0;
  bool converged = true;       // false: max_iter hit, sigma is best-so-far

  double safe_upper() const { return sigma * (1.0 + 10.0 * tol); }
};

SpectralEstimate spectral_norm(const Matrix& A, double tol = 1e-6,
                               std::size_t max_iter = 1000);

}  // namespace proshrink
