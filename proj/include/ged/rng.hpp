// Copyright 2026 The gedkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GED_RNG_HPP
#define GED_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ged {

/// splitmix64 finalizer; stateless 64-bit mixing.
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-item seed derivation: serial and parallel runs agree because the
/// seed depends only on (global seed, ordinal).
inline uint64_t derive_seed(uint64_t global_seed, uint64_t ordinal) {
  return mix64(global_seed ^ mix64(ordinal + 1));
}

/// Deterministic RNG with hand-rolled bounded sampling. std::*_distribution
/// is not portable across standard libraries, so it is never used here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform in [0, n); n must be positive. Rejection sampling, no bias.
  uint64_t next_below(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Index into `weights` with probability proportional to its entry.
  /// Weights must be non-negative with a positive sum.
  size_t weighted_choice(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = next_double() * total;
    for (size_t i = 0; i + 1 < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0.0) return i;
    }
    return weights.size() - 1;
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ged

#endif  // GED_RNG_HPP
