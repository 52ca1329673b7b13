// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DATASETIO_SPLIT_H_
#define FASTQSPR_DATASETIO_SPLIT_H_

#include <cstdint>
#include <vector>

namespace fastqspr::io {

struct SplitFractions {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

struct SplitIndices {
  std::vector<int> train;
  std::vector<int> val;
  std::vector<int> test;
};

// Seeded uniform shuffle; n_train = floor(train * n), n_val = floor(val * n),
// the remainder is test. Fractions must sum to 1 (within 1e-9) and every
// part must be non-empty.
SplitIndices RandomSplit(int n_rows, const SplitFractions& fractions, std::uint64_t seed);

}  // namespace fastqspr::io

#endif  // FASTQSPR_DATASETIO_SPLIT_H_
