// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_ATTRIBUTION_SHAPLEY_H_
#define FASTQSPR_ATTRIBUTION_SHAPLEY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/neural/model.h"

namespace fastqspr::attr {

inline constexpr int kDefaultPermutations = 128;

struct ShapleyOptions {
  int permutations = kDefaultPermutations;
  std::uint64_t seed = 0;
  int target = 0;  // output column to explain
  // Reference point in raw descriptor units, aligned with the manifest.
  // Defaults to the training mean (0 in standardized space).
  std::optional<std::vector<double>> raw_baseline = std::nullopt;
};

// Attributions in target units (probabilities for classification), one
// per manifest descriptor. Descriptors the feature scaler dropped never
// reach the network and get exactly 0.
struct AttributionResult {
  std::vector<std::string> features;
  std::vector<double> values;
  double base_value = 0.0;
  double explained_output = 0.0;
};

// Permutation-sampling Shapley estimate for one standardized input row
// (columns = feature_scaler.kept_columns). For each sampled ordering the
// features are switched from baseline to instance one at a time and each
// output change is credited to the feature just switched.
std::vector<double> ShapleyStandardized(const nn::ModelCheckpoint& model, std::span<const double> instance,
                                        std::span<const double> baseline, int permutations, std::uint64_t seed,
                                        int target);

// Explains every row of a raw descriptor matrix; row r uses seed + r, so
// results do not depend on the worker count.
std::vector<AttributionResult> AttributeRows(const nn::ModelCheckpoint& model, const LabeledMatrix& raw,
                                             const ShapleyOptions& options, std::size_t workers = 0);

// Element-wise mean of per-checkpoint results for the same rows.
std::vector<AttributionResult> AverageAttributions(const std::vector<std::vector<AttributionResult>>& runs);

struct Importance {
  std::string descriptor;
  double mean_abs_attribution = 0.0;

  bool operator==(const Importance&) const = default;
};

// Descriptors ranked by mean |attribution| over rows (descending, ties in
// manifest order).
std::vector<Importance> DatasetImportance(const std::vector<AttributionResult>& rows);

}  // namespace fastqspr::attr

#endif  // FASTQSPR_ATTRIBUTION_SHAPLEY_H_
