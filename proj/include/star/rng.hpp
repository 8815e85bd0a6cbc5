#pragma once

#include <cmath>
#include <cstdint>

namespace star {

// splitmix64 step; also usable as a stateless mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b * 0x9E3779B97F4A7C15ull + 0x7F4A7C15ull);
  return splitmix64(s);
}

// Self-contained deterministic RNG. We avoid <random> distributions on
// purpose: their output is implementation-defined, and dataset files,
// training traces and evaluation tables must reproduce bit-exactly from a
// seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {
    // warm up so that small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // derive an independent substream; `tag` selects the stream
  Rng fork(std::uint64_t tag) const { return Rng(mix64(state_, tag)); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    // rejection-free modulo is fine here; n is always tiny vs 2^64
    return next_u64() % n;
  }

  // standard normal via Box-Muller
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mean, double std) { return mean + std * normal(); }

  // normal(0, std) truncated to [-2*std, 2*std], rejection sampled
  double trunc_normal(double std) {
    for (;;) {
      double x = normal() * std;
      if (x >= -2.0 * std && x <= 2.0 * std) return x;
    }
  }

  template <typename It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      auto j = uniform_int(i);
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace star
