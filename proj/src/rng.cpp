#include "proshrink/rng.hpp"

#include <cmath>

namespace proshrink::rng {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t s,
                          std::uint64_t trial) {
  return mix(mix(mix(base) ^ s) ^ trial);
}

double Generator::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Generator::uniform01_open() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double Generator::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01_open();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::size_t Generator::index_below(std::size_t k) {
  const auto idx = static_cast<std::size_t>(uniform01() * static_cast<double>(k));
  return idx >= k ? k - 1 : idx;
}

}  // namespace proshrink::rng
