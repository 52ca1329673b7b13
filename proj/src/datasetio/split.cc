// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/datasetio/split.h"

#include <cmath>
#include <numeric>
#include <span>
#include <string>

#include "fastqspr/common/rng.h"
#include "fastqspr/datasetio/csv.h"

namespace fastqspr::io {

SplitIndices RandomSplit(int n_rows, const SplitFractions& f, std::uint64_t seed) {
  if (f.train < 0 || f.val < 0 || f.test < 0) throw IoError("split fractions must be non-negative");
  if (std::abs(f.train + f.val + f.test - 1.0) > 1e-9) throw IoError("split fractions must sum to 1");
  if (n_rows < 3) throw IoError("a three-way split needs at least 3 rows");
  // The small slack keeps e.g. 0.8 * 55 = 44 from rounding down to 43.
  const int n_train = static_cast<int>(std::floor(f.train * n_rows + 1e-9));
  const int n_val = static_cast<int>(std::floor(f.val * n_rows + 1e-9));
  const int n_test = n_rows - n_train - n_val;
  if (n_train < 1 || n_val < 1 || n_test < 1) {
    throw IoError("split of " + std::to_string(n_rows) + " rows leaves an empty part (" + std::to_string(n_train) +
                  "/" + std::to_string(n_val) + "/" + std::to_string(n_test) + ")");
  }
  std::vector<int> order(static_cast<std::size_t>(n_rows));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<int>(order));
  SplitIndices s;
  s.train.assign(order.begin(), order.begin() + n_train);
  s.val.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  s.test.assign(order.begin() + n_train + n_val, order.end());
  return s;
}

}  // namespace fastqspr::io
