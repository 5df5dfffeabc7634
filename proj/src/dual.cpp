#include "proshrink/dual.hpp"

#include "proshrink/operators.hpp"

#include <stdexcept>

namespace proshrink {

Vector primal_from_dual(const Problem& P, const Vector& y) {
  if (y.size() != P.A.rows())
    throw std::invalid_argument("primal_from_dual: dual length must equal rows");
  return projected_shrink(P.u + P.tau * (P.A.transpose() * y),
                          ProxSpec(P.tau, P.X));
}

double dual_value(const Problem& P, const Vector& y) {
  const Vector x = primal_from_dual(P, y);
  const Vector diff = x - P.u;
  return x.lpNorm<1>() + diff.squaredNorm() / (2.0 * P.tau) +
         y.dot(P.b - P.A * x);
}

Vector dual_gradient(const Problem& P, const Vector& y) {
  return P.b - P.A * primal_from_dual(P, y);
}

}  // namespace proshrink
