// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/common/rng.h"

#include <limits>

namespace fastqspr {

std::uint64_t Rng::UniformIndex(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

}  // namespace fastqspr
