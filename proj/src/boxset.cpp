#include "proshrink/boxset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace proshrink {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Interval::Interval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (std::isnan(lower) || std::isnan(upper))
    throw std::invalid_argument("Interval: NaN endpoint");
  if (lower > upper)
    throw std::invalid_argument("Interval: lower " + std::to_string(lower) +
                                " > upper " + std::to_string(upper));
  const bool both_inf = std::isinf(lower) && std::isinf(upper);
  if (both_inf && !(lower < 0 && upper > 0))
    throw std::invalid_argument("Interval: invalid infinite endpoints");
}

bool Interval::bounded_below() const { return std::isfinite(lower_); }
bool Interval::bounded_above() const { return std::isfinite(upper_); }

Interval Interval::whole_line() { return Interval(-kInf, kInf); }

IntervalClass classify(const Interval& I) {
  const double lo = I.lower();
  const double hi = I.upper();
  // T1 forms require strict inequalities; degenerate [c,c] falls through.
  if (lo > 0 && hi > lo) return IntervalClass::T1;
  if (hi < 0 && lo < hi) return IntervalClass::T1;
  if (std::isfinite(lo) && std::isfinite(hi) && lo < 0 && hi > 0)
    return IntervalClass::T2;
  return IntervalClass::Closure;
}

double anchor(const Interval& I) {
  if (classify(I) != IntervalClass::T1)
    throw std::invalid_argument("anchor: interval is not in class T1");
  return I.lower() > 0 ? I.lower() : I.upper();
}

int sign_anchor(const Interval& I) { return anchor(I) > 0 ? 1 : -1; }

double project_interval(const Interval& I, double w) {
  return std::min(std::max(w, I.lower()), I.upper());
}

Interval scale_interval(const Interval& I, double tau) {
  if (!(tau > 0)) throw std::invalid_argument("scale_interval: tau must be > 0");
  return Interval(I.lower() / tau, I.upper() / tau);
}

BoxSet::BoxSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty())
    throw std::invalid_argument("BoxSet: needs at least one interval");
}

BoxSet BoxSet::uniform(std::size_t n, double lower, double upper) {
  return BoxSet(std::vector<Interval>(n, Interval(lower, upper)));
}

BoxSet BoxSet::whole_line(std::size_t n) {
  return BoxSet(std::vector<Interval>(n, Interval::whole_line()));
}

Vector project_box(const BoxSet& X, const Vector& v) {
  if (static_cast<std::size_t>(v.size()) != X.size())
    throw std::invalid_argument("project_box: dimension mismatch");
  Vector out(v.size());
  for (long i = 0; i < v.size(); ++i)
    out[i] = project_interval(X[static_cast<std::size_t>(i)], v[i]);
  return out;
}

bool contains(const BoxSet& X, const Vector& x) {
  if (static_cast<std::size_t>(x.size()) != X.size())
    throw std::invalid_argument("contains: dimension mismatch");
  for (long i = 0; i < x.size(); ++i) {
    const Interval& I = X[static_cast<std::size_t>(i)];
    if (x[i] < I.lower() || x[i] > I.upper()) return false;
  }
  return true;
}

}  // namespace proshrink
