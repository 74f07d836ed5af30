#pragma once

// Deterministic 64-bit generator for seeded trials: the SplitMix64 sequence
// (Steele, Lea, Flood 2014).  Chosen over std::mt19937 so that streams are
// reproducible across standard libraries and trivially splittable by seed.

#include <cstdint>

#include "maglap/cochains.hpp"
#include "maglap/magnetic.hpp"

namespace maglap {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  // Uniform in [-1, 1).
  double symmetric() noexcept { return 2.0 * uniform() - 1.0; }
  // Real and imaginary parts uniform in [-1, 1).
  cplx complex_box() noexcept {
    double re = symmetric();
    return {re, symmetric()};
  }

 private:
  std::uint64_t state_;
};

Cochain0 random_cochain0(const GridSpec& g, CounterRng& rng);
// extended_layer = false leaves the k = 0 and s = 0 layers zero.
Cochain1 random_cochain1(const GridSpec& g, CounterRng& rng,
                         bool extended_layer = true);
Cochain2 random_cochain2(const GridSpec& g, CounterRng& rng);
Cochain0 random_real_cochain0(const GridSpec& g, CounterRng& rng);
MagneticPotential random_potential(const GridSpec& g, CounterRng& rng);

}  // namespace maglap
