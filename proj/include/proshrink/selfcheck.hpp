#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace proshrink::selfcheck {

// Randomized identity batteries. Each runs `count` cases from a fixed seed
// and reports the first counterexample with enough data to replay it.

struct BatteryResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_counterexample;  // empty when failed == 0

  bool ok() const { return failed == 0; }
};

// projected shrinkage == exact 1-D prox oracle, coordinate classes T1, T2
// and the closure extension, tau log-uniform in [1e-3, 1e3],
// q in [-1e4, 1e4]; |lhs - rhs| <= tol * max(1, |q|).
BatteryResult check_key_identity(std::size_t count = 100000,
                                 double tol = 1e-12,
                                 std::uint64_t seed = 0x60D5EED);

// clamp(shrink(q), I) == clamp(q - sign_anchor(I), I) on T1 intervals.
BatteryResult check_sign_anchor_identity(std::size_t count = 10000,
                                         double tol = 1e-15,
                                         std::uint64_t seed = 0x60D5EED + 1);

// Firm nonexpansiveness and the 1-Lipschitz bound of projected shrinkage.
BatteryResult check_firm_nonexpansive(std::size_t count = 10000,
                                      double slack = 1e-12,
                                      std::uint64_t seed = 0x60D5EED + 2);

// Central finite differences of the dual value against the dual gradient
// at kink-avoiding points of random problems.
BatteryResult check_dual_gradient(std::size_t problems = 100,
                                  double rel_tol = 1e-5,
                                  std::uint64_t seed = 0x60D5EED + 3);

std::vector<BatteryResult> run_all();

}  // namespace proshrink::selfcheck
