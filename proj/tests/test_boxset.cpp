#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "proshrink/boxset.hpp"
#include "proshrink/rng.hpp"

#include <cmath>
#include <limits>

using namespace proshrink;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(kInf, kInf), std::invalid_argument);
  CHECK_THROWS_AS(Interval(-kInf, -kInf), std::invalid_argument);
  CHECK_NOTHROW(Interval(-kInf, kInf));
  CHECK_NOTHROW(Interval(2.0, 2.0));
}

TEST_CASE("classification") {
  CHECK(classify(Interval(1, 2)) == IntervalClass::T1);
  CHECK(anchor(Interval(1, 2)) == 1.0);
  CHECK(sign_anchor(Interval(1, 2)) == 1);

  CHECK(classify(Interval(-3, 5)) == IntervalClass::T2);
  CHECK(classify(Interval(0, 5)) == IntervalClass::Closure);

  CHECK(classify(Interval(2, kInf)) == IntervalClass::T1);
  CHECK(sign_anchor(Interval(2, kInf)) == 1);
  CHECK(classify(Interval(-kInf, -2)) == IntervalClass::T1);
  CHECK(anchor(Interval(-kInf, -2)) == -2.0);
  CHECK(sign_anchor(Interval(-kInf, -2)) == -1);
  CHECK(classify(Interval(-5, -1)) == IntervalClass::T1);
  CHECK(anchor(Interval(-5, -1)) == -1.0);

  CHECK(classify(Interval::whole_line()) == IntervalClass::Closure);
  CHECK(classify(Interval(2, 2)) == IntervalClass::Closure);
  CHECK(classify(Interval(-1, 0)) == IntervalClass::Closure);
  CHECK(classify(Interval(-3, kInf)) == IntervalClass::Closure);
  CHECK(classify(Interval(-kInf, 3)) == IntervalClass::Closure);

  CHECK_THROWS_AS(anchor(Interval(-3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(sign_anchor(Interval(0, 5)), std::invalid_argument);
}

TEST_CASE("interval projection") {
  CHECK(project_interval(Interval(-1, 1), 3.0) == 1.0);
  CHECK(project_interval(Interval(2, kInf), 0.0) == 2.0);
  CHECK(project_interval(Interval(-1, 1), 0.4) == 0.4);
  CHECK(project_interval(Interval::whole_line(), -7.5) == -7.5);
}

TEST_CASE("box projection") {
  BoxSet X = BoxSet::uniform(2, -1, 1);
  Vector v(2);
  v << 2, -3;
  Vector p = project_box(X, v);
  CHECK(p[0] == 1.0);
  CHECK(p[1] == -1.0);

  Vector inside(2);
  inside << 0.25, -0.75;
  CHECK(project_box(X, inside) == inside);
  CHECK(project_box(X, p) == p);  // idempotent on the boundary too

  Vector wrong(3);
  wrong.setZero();
  CHECK_THROWS_AS(project_box(X, wrong), std::invalid_argument);
}

TEST_CASE("box projection agrees with per-coordinate grid search") {
  rng::Generator gen(42);
  std::vector<Interval> intervals;
  intervals.push_back(Interval(-1, 1));
  intervals.push_back(Interval(0.5, 4));
  intervals.push_back(Interval(-3, -0.25));
  intervals.push_back(Interval(-2, 0));
  BoxSet X(intervals);

  const double step = 1e-4;
  for (int trial = 0; trial < 25; ++trial) {
    Vector v(4);
    for (long i = 0; i < 4; ++i) v[i] = 8.0 * (gen.uniform01() - 0.5);
    Vector p = project_box(X, v);
    for (long i = 0; i < 4; ++i) {
      const Interval& I = intervals[static_cast<std::size_t>(i)];
      double best = I.lower();
      double best_d = std::abs(best - v[i]);
      for (double t = I.lower(); t <= I.upper() + step / 2; t += step) {
        const double tt = std::min(t, I.upper());
        const double d = std::abs(tt - v[i]);
        if (d < best_d) {
          best_d = d;
          best = tt;
        }
      }
      CHECK(std::abs(p[i] - best) <= step);
    }
  }
}

TEST_CASE("box projection is nonexpansive") {
  rng::Generator gen(43);
  BoxSet X = BoxSet::uniform(10, -2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Vector v(10), w(10);
    for (long i = 0; i < 10; ++i) v[i] = 10 * gen.gaussian();
    for (long i = 0; i < 10; ++i) w[i] = 10 * gen.gaussian();
    CHECK((project_box(X, v) - project_box(X, w)).norm() <=
          (v - w).norm() * (1 + 1e-15));
  }
}

TEST_CASE("interval scaling") {
  Interval a = scale_interval(Interval(2, 4), 2.0);
  CHECK(a.lower() == 1.0);
  CHECK(a.upper() == 2.0);

  Interval b = scale_interval(Interval(-1, 1), 0.5);
  CHECK(b.lower() == -2.0);
  CHECK(b.upper() == 2.0);

  Interval c = scale_interval(Interval(1, kInf), 3.0);
  CHECK(c.upper() == kInf);

  CHECK_THROWS_AS(scale_interval(Interval(0, 1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_interval(Interval(0, 1), -2.0), std::invalid_argument);
}

TEST_CASE("projection scaling identity") {
  // worked example: tau=3, I=[1,5], w=0.2
  const Interval I(1, 5);
  CHECK(project_interval(I, 3.0 * 0.2) == 1.0);
  CHECK(3.0 * project_interval(scale_interval(I, 3.0), 0.2) == 1.0);

  // random check over mixed classes
  rng::Generator gen(44);
  for (int trial = 0; trial < 500; ++trial) {
    const double lo = -5 + 10 * gen.uniform01();
    const double hi = lo + 5 * gen.uniform01();
    const Interval J(lo, hi);
    const double tau = std::exp(std::log(1e-2) + gen.uniform01() * std::log(1e4));
    const double w = 20 * (gen.uniform01() - 0.5);
    const double lhs = project_interval(J, tau * w);
    const double rhs = tau * project_interval(scale_interval(J, tau), w);
    CHECK(std::abs(lhs - rhs) <= 1e-15 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("membership") {
  BoxSet X = BoxSet::uniform(2, -1, 1);
  Vector edge(2);
  edge << 1, -1;
  CHECK(contains(X, edge));

  Vector out(2);
  out << 1.0001, 0;
  CHECK(!contains(X, out));

  // +-1 spike train inside [-1,1]^n
  Vector spikes(6);
  spikes << 1, -1, 0, 1, 0, -1;
  CHECK(contains(BoxSet::uniform(6, -1, 1), spikes));

  Vector wrong(3);
  wrong.setZero();
  CHECK_THROWS_AS(contains(X, wrong), std::invalid_argument);
}

TEST_CASE("sampling a T2 interval straddles zero") {
  const Interval I(-2, 3);
  REQUIRE(classify(I) == IntervalClass::T2);
  rng::Generator gen(45);
  bool neg = false, pos = false;
  for (int i = 0; i < 100; ++i) {
    const double t = I.lower() + gen.uniform01() * (I.upper() - I.lower());
    neg = neg || t < 0;
    pos = pos || t > 0;
  }
  CHECK(neg);
  CHECK(pos);
}

TEST_CASE("boxset construction") {
  CHECK_THROWS_AS(BoxSet(std::vector<Interval>{}), std::invalid_argument);
  BoxSet w = BoxSet::whole_line(3);
  CHECK(w.size() == 3);
  CHECK(w[0].lower() == -kInf);
  CHECK(w[2].upper() == kInf);
}
