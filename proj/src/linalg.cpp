#include "proshrink/linalg.hpp"

#include "proshrink/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace proshrink {

namespace {

[[noreturn]] void dim_error(const char* op, long a, long b) {
  throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                              std::to_string(a) + " vs " + std::to_string(b) +
                              ")");
}

}  // namespace

Vector matvec(const Matrix& A, const Vector& x) {
  if (x.size() != A.cols()) dim_error("matvec", A.cols(), x.size());
  return A * x;
}

Vector rmatvec(const Matrix& A, const Vector& y) {
  if (y.size() != A.rows()) dim_error("rmatvec", A.rows(), y.size());
  return A.transpose() * y;
}

Norms norms(const Vector& x) {
  Norms out;
  out.l1 = x.lpNorm<1>();
  out.l2 = x.norm();
  out.linf = x.size() == 0 ? 0.0 : x.lpNorm<Eigen::Infinity>();
  return out;
}

SpectralEstimate spectral_norm(const Matrix& A, double tol,
                               std::size_t max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("spectral_norm: tol must be > 0");
  if (max_iter < 1)
    throw std::invalid_argument("spectral_norm: max_iter must be >= 1");

  SpectralEstimate est;
  est.tol = tol;

  // Power iteration on the smaller Gram matrix; the estimate ||A v|| for a
  // unit vector v is a Rayleigh quotient and never exceeds ||A||_2.
  const bool tall = A.rows() >= A.cols();
  const Matrix& B = A;  // apply as B or B^T depending on side
  const long dim = tall ? A.cols() : A.rows();

  rng::Generator gen(0x5eedc7ULL);
  Vector v(dim);
  for (long i = 0; i < dim; ++i) v[i] = gen.gaussian();
  double vn = v.norm();
  if (vn == 0) {
    v.setZero();
    v[0] = 1.0;
    vn = 1.0;
  }
  v /= vn;

  double sigma = 0;
  est.converged = false;
  for (std::size_t k = 1; k <= max_iter; ++k) {
    Vector w = tall ? Vector(B * v) : Vector(B.transpose() * v);
    const double s = w.norm();
    est.iterations = k;
    if (s == 0) {  // A annihilates v: the zero matrix (or a lucky null start)
      sigma = 0;
      est.converged = true;
      break;
    }
    Vector gv = tall ? Vector(B.transpose() * w) : Vector(B * w);
    const double gn = gv.norm();
    if (gn == 0) {
      sigma = s;
      est.converged = true;
      break;
    }
    v = gv / gn;
    if (std::abs(s - sigma) <= tol * std::max(s, 1e-300)) {
      sigma = s;
      est.converged = true;
      break;
    }
    sigma = s;
  }
  est.sigma = sigma;
  return est;
}

}  // namespace proshrink
