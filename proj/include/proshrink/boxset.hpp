#pragma once

#include "proshrink/linalg.hpp"

#include <cstddef>
#include <vector>

namespace proshrink {

// One coordinate's constraint set, a closed interval with extended-real
// endpoints. [-inf, inf] is the explicit whole-line extension; degenerate
// [c, c] is allowed and pins the coordinate.
class Interval {
 public:
  Interval(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool bounded_below() const;
  bool bounded_above() const;

  static Interval whole_line();

 private:
  double lower_;
  double upper_;
};

// T1: sign-definite intervals that keep 0 strictly outside,
//       [c,inf) c>0 | (-inf,c] c<0 | [c,d] 0<c<d | [d,c] d<c<0.
// T2: finite intervals with 0 strictly interior, [c,d] c<0<d.
// Closure: every other valid interval (an endpoint exactly 0, a zero-length
//          interval, the whole line, or an unbounded interval containing 0).
enum class IntervalClass { T1, T2, Closure };

IntervalClass classify(const Interval& I);

// The T1 endpoint nearer zero (the "c" of the T1 forms) and its sign.
// Both throw std::invalid_argument when classify(I) != T1.
double anchor(const Interval& I);
int sign_anchor(const Interval& I);

// Nearest point of I, i.e. clamp(w, lower, upper).
double project_interval(const Interval& I, double w);

// I/tau = [lower/tau, upper/tau]; infinite endpoints are preserved.
// Throws std::invalid_argument unless tau > 0.
Interval scale_interval(const Interval& I, double tau);

// Product of per-coordinate intervals.
class BoxSet {
 public:
  explicit BoxSet(std::vector<Interval> intervals);

  static BoxSet uniform(std::size_t n, double lower, double upper);
  static BoxSet whole_line(std::size_t n);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }

  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }

 private:
  std::vector<Interval> intervals_;
};

// Coordinate-wise nearest point of X; idempotent and nonexpansive.
Vector project_box(const BoxSet& X, const Vector& v);

// Inclusive membership test, no tolerance band.
bool contains(const BoxSet& X, const Vector& x);

}  // namespace proshrink
