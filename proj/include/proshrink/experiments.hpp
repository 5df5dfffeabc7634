#pragma once

#include "proshrink/boxset.hpp"
#include "proshrink/linalg.hpp"
#include "proshrink/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace proshrink {

// Sparse-recovery benchmark: seeded Gaussian instances and the
// recovery-rate-vs-sparsity sweep comparing the box-constrained run
// against the whole-line (linearized Bregman) reduction.

struct InstanceSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t sparsity = 0;   // 1 <= sparsity <= n
  double amplitude = 1.0;     // spikes are +-amplitude
  std::uint64_t seed = 0;
};

struct Instance {
  Matrix A;    // i.i.d. standard normal entries
  Vector x0;   // ground-truth signal, exactly `sparsity` nonzeros
  Vector b;    // A * x0
};

// Bit-identical output for identical spec. Generation order: A row-major,
// then the support (partial Fisher-Yates), then the signs.
Instance generate_instance(const InstanceSpec& spec);

// ||x - x0||_2 / ||x0||_2 <= threshold. Throws when x0 = 0.
bool recovered(const Vector& x, const Vector& x0, double threshold = 1e-12);

struct SweepRow {
  std::size_t s = 0;
  std::size_t trials = 0;
  std::size_t recovered_proshrink = 0;
  std::size_t recovered_lbreg = 0;
  double rate_proshrink = 0;
  double rate_lbreg = 0;
  // Solver divergences count as non-recoveries; kept for tally checks,
  // not part of the CSV schema.
  std::size_t diverged_proshrink = 0;
  std::size_t diverged_lbreg = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

// For each s in s_list and trial t, generates the instance with seed
// derive_seed(base_seed, s, t) and solves the anchored model (u = 0) twice:
// once with `box` and once with the whole-line box (the LBreg reduction).
// Trials run in parallel; the report is assembled by (s, trial) index, so
// output is identical for any thread count. threads = 0 picks the hardware
// concurrency.
SweepReport sweep(std::size_t m, std::size_t n,
                  const std::vector<std::size_t>& s_list, std::size_t trials,
                  double tau, const BoxSet& box, const SolverConfig& cfg,
                  std::uint64_t base_seed, std::size_t threads = 0);

}  // namespace proshrink
