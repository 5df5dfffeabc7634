#include "proshrink/selfcheck.hpp"

#include "proshrink/boxset.hpp"
#include "proshrink/dual.hpp"
#include "proshrink/io.hpp"
#include "proshrink/operators.hpp"
#include "proshrink/problem.hpp"
#include "proshrink/rng.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace proshrink::selfcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log-uniform magnitude in [1e-3, 1e3]
double magnitude(rng::Generator& gen) {
  return std::exp(std::log(1e-3) + gen.uniform01() * std::log(1e6));
}

// Random interval spanning the sign-definite and zero-straddling classes
// plus the closure extension (zero endpoints, unbounded zero-containing,
// whole line, degenerate).
Interval random_interval(rng::Generator& gen, bool t1_only = false) {
  const std::size_t form = gen.index_below(t1_only ? 4 : 11);
  const double a = magnitude(gen);
  const double b = magnitude(gen);
  switch (form) {
    case 0: return Interval(a, kInf);            // T1, c > 0
    case 1: return Interval(-kInf, -a);          // T1, c < 0
    case 2: return Interval(a, a + b);           // T1, 0 < c < d
    case 3: return Interval(-a - b, -a);         // T1, d < c < 0
    case 4: return Interval(-a, b);              // T2
    case 5: return Interval(0.0, b);             // closure: zero endpoint
    case 6: return Interval(-a, 0.0);            // closure: zero endpoint
    case 7: return Interval::whole_line();       // closure: whole line
    case 8: return Interval(-a, kInf);           // closure: unbounded over 0
    case 9: return Interval(-kInf, b);           // closure: unbounded over 0
    default: {
      const std::size_t pick = gen.index_below(3);
      const double c = pick == 0 ? a : (pick == 1 ? -a : 0.0);
      return Interval(c, c);                     // closure: degenerate
    }
  }
}

std::string describe(const Interval& I, double tau, double q, double lhs,
                     double rhs) {
  std::ostringstream os;
  os << "I=[" << io::format_full(I.lower()) << ", " << io::format_full(I.upper())
     << "] tau=" << io::format_full(tau) << " q=" << io::format_full(q)
     << " lhs=" << io::format_full(lhs) << " rhs=" << io::format_full(rhs);
  return os.str();
}

}  // namespace

BatteryResult check_key_identity(std::size_t count, double tol,
                                 std::uint64_t seed) {
  BatteryResult res;
  res.name = "key identity (projected shrinkage == prox oracle)";
  rng::Generator gen(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Interval I = random_interval(gen);
    const double tau = magnitude(gen);
    const double q = (2.0 * gen.uniform01() - 1.0) * 1e4;
    const double lhs = projected_shrink_1d(I, tau, q);
    const double rhs = prox_oracle_1d(I, tau, q);
    ++res.checked;
    if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(q))) {
      ++res.failed;
      if (res.first_counterexample.empty())
        res.first_counterexample = describe(I, tau, q, lhs, rhs);
    }
  }
  return res;
}

BatteryResult check_sign_anchor_identity(std::size_t count, double tol,
                                         std::uint64_t seed) {
  BatteryResult res;
  res.name = "sign-anchor identity on T1 intervals";
  rng::Generator gen(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Interval I = random_interval(gen, /*t1_only=*/true);
    const double q = (2.0 * gen.uniform01() - 1.0) * 2e3;
    const double lhs = project_interval(I, shrink(q));
    const double rhs = sign_anchor_form(I, q);
    ++res.checked;
    if (std::abs(lhs - rhs) > tol) {
      ++res.failed;
      if (res.first_counterexample.empty())
        res.first_counterexample = describe(I, 1.0, q, lhs, rhs);
    }
  }
  return res;
}

BatteryResult check_firm_nonexpansive(std::size_t count, double slack,
                                      std::uint64_t seed) {
  BatteryResult res;
  res.name = "firm nonexpansiveness / 1-Lipschitz of projected shrinkage";
  rng::Generator gen(seed);
  const long n = 25;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (long j = 0; j < n; ++j) intervals.push_back(random_interval(gen));
    const double tau = std::exp(std::log(0.1) + gen.uniform01() * std::log(100.0));
    const ProxSpec spec(tau, BoxSet(std::move(intervals)));

    Vector v(n), w(n);
    for (long j = 0; j < n; ++j) v[j] = 3.0 * gen.gaussian();
    for (long j = 0; j < n; ++j) w[j] = 3.0 * gen.gaussian();
    const Vector pv = projected_shrink(v, spec);
    const Vector pw = projected_shrink(w, spec);
    const double d2 = (pv - pw).squaredNorm();
    const double ip = (v - w).dot(pv - pw);
    const double lip = (pv - pw).norm() - (v - w).norm() * (1.0 + slack);
    ++res.checked;
    if (d2 > ip + slack || lip > 0) {
      ++res.failed;
      if (res.first_counterexample.empty()) {
        std::ostringstream os;
        os << "pair " << i << ": ||p(v)-p(w)||^2=" << io::format_full(d2)
           << " <v-w,p(v)-p(w)>=" << io::format_full(ip)
           << " lipschitz excess=" << io::format_full(lip);
        res.first_counterexample = os.str();
      }
    }
  }
  return res;
}

BatteryResult check_dual_gradient(std::size_t problems, double rel_tol,
                                  std::uint64_t seed) {
  BatteryResult res;
  res.name = "dual gradient vs central finite differences";
  rng::Generator gen(seed);
  const std::size_t m = 10, n = 20;
  const double fd_step = 1e-6;
  const double kink_margin = 1e-4;

  for (std::size_t p = 0; p < problems; ++p) {
    Matrix A(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        A(static_cast<long>(i), static_cast<long>(j)) = gen.gaussian();

    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) intervals.push_back(random_interval(gen));
    BoxSet X(std::move(intervals));

    // Feasible point inside the box so the standing assumption holds.
    Vector xf(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Interval& I = X[j];
      if (I.bounded_below() && I.bounded_above())
        xf[static_cast<long>(j)] =
            I.lower() + gen.uniform01() * (I.upper() - I.lower());
      else if (I.bounded_below())
        xf[static_cast<long>(j)] = I.lower() + std::abs(gen.gaussian());
      else if (I.bounded_above())
        xf[static_cast<long>(j)] = I.upper() - std::abs(gen.gaussian());
      else
        xf[static_cast<long>(j)] = gen.gaussian();
    }
    const Vector b = A * xf;
    const double tau = std::exp(std::log(0.5) + gen.uniform01() * std::log(10.0));
    Vector u(n);
    for (std::size_t j = 0; j < n; ++j) u[static_cast<long>(j)] = gen.gaussian();
    const Problem P(A, b, X, tau, u);

    // Sample y clear of the shrink kinks and the box endpoints so the
    // finite-difference stencil stays on one smooth piece.
    Vector y(m);
    bool clear = false;
    for (std::size_t attempt = 0; attempt < 1000 && !clear; ++attempt) {
      for (std::size_t i = 0; i < m; ++i) y[static_cast<long>(i)] = gen.gaussian();
      const Vector w = u / tau + A.transpose() * y;
      clear = true;
      for (long j = 0; j < w.size(); ++j) {
        if (std::abs(w[j] - 1.0) < kink_margin ||
            std::abs(w[j] + 1.0) < kink_margin) {
          clear = false;
          break;
        }
        const double t = tau * shrink(w[j]);
        const Interval& I = X[static_cast<std::size_t>(j)];
        if ((I.bounded_below() && std::abs(t - I.lower()) < kink_margin) ||
            (I.bounded_above() && std::abs(t - I.upper()) < kink_margin)) {
          clear = false;
          break;
        }
      }
    }

    const Vector g = dual_gradient(P, y);
    Vector fd(m);
    for (std::size_t i = 0; i < m; ++i) {
      Vector yp = y, ym = y;
      yp[static_cast<long>(i)] += fd_step;
      ym[static_cast<long>(i)] -= fd_step;
      fd[static_cast<long>(i)] =
          (dual_value(P, yp) - dual_value(P, ym)) / (2.0 * fd_step);
    }
    ++res.checked;
    const double err = (fd - g).norm() / std::max(1.0, g.norm());
    if (err > rel_tol) {
      ++res.failed;
      if (res.first_counterexample.empty()) {
        std::ostringstream os;
        os << "problem " << p << ": rel error " << io::format_full(err)
           << " (clear=" << clear << ")";
        res.first_counterexample = os.str();
      }
    }
  }
  return res;
}

std::vector<BatteryResult> run_all() {
  return {check_key_identity(), check_sign_anchor_identity(),
          check_firm_nonexpansive(), check_dual_gradient()};
}

}  // namespace proshrink::selfcheck
