#pragma once

#include <cstdint>
#include <random>

namespace proshrink::rng {

// Deterministic random primitives used everywhere randomness is needed.
// The exact derivations are documented in the README so that a rerun with
// the same seed is reproducible: doubles come from the top 53 bits of
// mt19937_64 outputs, Gaussians from the trigonometric Box-Muller transform,
// and derived seeds from the splitmix64 finalizer.

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t z);

// Stable per-trial seed: mix is folded over (base, s, trial) left to right.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t s,
                          std::uint64_t trial);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  // (next() >> 11) * 2^-53, in [0, 1).
  double uniform01();

  // ((next() >> 11) + 1) * 2^-53, in (0, 1]. Safe under log().
  double uniform01_open();

  // Standard normal; Box-Muller pairs, cosine branch returned first.
  double gaussian();

  // floor(uniform01() * k), in [0, k). Requires k >= 1.
  std::size_t index_below(std::size_t k);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace proshrink::rng
