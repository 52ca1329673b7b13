// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_COMMON_RNG_H_
#define FASTQSPR_COMMON_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace fastqspr {

// Seeded generator with platform-independent derived draws. The standard
// distributions are implementation-defined, so uniform reals and bounded
// integers are produced directly from the raw 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double UniformUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * UniformUnit(); }

  // Unbiased integer in [0, bound) via rejection sampling.
  std::uint64_t UniformIndex(std::uint64_t bound);

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(UniformIndex(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fastqspr

#endif  // FASTQSPR_COMMON_RNG_H_
