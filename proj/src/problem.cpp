#include "proshrink/problem.hpp"

#include <stdexcept>

namespace proshrink {

Problem::Problem(Matrix A_in, Vector b_in, BoxSet X_in, double tau_in,
                 Vector u_in)
    : A(std::move(A_in)),
      b(std::move(b_in)),
      X(std::move(X_in)),
      tau(tau_in),
      u(std::move(u_in)) {
  if (A.rows() < 1 || A.cols() < 1)
    throw std::invalid_argument("Problem: matrix must be at least 1x1");
  if (b.size() != A.rows())
    throw std::invalid_argument("Problem: rhs length must equal matrix rows");
  if (X.size() != static_cast<std::size_t>(A.cols()))
    throw std::invalid_argument("Problem: box length must equal matrix cols");
  if (!(tau > 0)) throw std::invalid_argument("Problem: tau must be > 0");
  if (u.size() == 0) u = Vector::Zero(A.cols());
  if (u.size() != A.cols())
    throw std::invalid_argument("Problem: anchor length must equal matrix cols");
}

}  // namespace proshrink
