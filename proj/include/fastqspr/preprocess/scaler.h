// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_PREPROCESS_SCALER_H_
#define FASTQSPR_PREPROCESS_SCALER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"

namespace fastqspr::prep {

class ScalerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bound used when clamping is switched on without an explicit value.
inline constexpr double kDefaultClampBound = 3.0;

// Frozen column statistics. Fitted on training rows and reused unchanged for
// validation, test and prediction rows.
struct ScalerState {
  std::vector<std::string> kept_columns;
  std::vector<double> means;
  std::vector<double> stds;  // always > 0
  std::optional<double> clamp_bound;
  bool target_flag = false;

  bool operator==(const ScalerState&) const = default;
};

// Feature scaler: per-column mean and sample standard deviation over the
// non-missing entries. Constant and all-missing columns are dropped.
ScalerState FitFeatures(const LabeledMatrix& train, std::optional<double> clamp_bound = std::nullopt);

// Regression target scaler. Every column is kept; a constant column gets
// std 1 so that it is centred but not inflated. Throws if a column has no
// observed value.
ScalerState FitTargets(const LabeledMatrix& train);

// Pass-through scaler (mean 0, std 1) for classification labels.
ScalerState IdentityScaler(const std::vector<std::string>& columns, bool target_flag);

// Selects kept_columns by name and z-scores them. Missing features become 0
// (the training mean); missing targets stay missing so the loss can mask
// them. Throws ScalerError naming any kept column absent from the input.
LabeledMatrix Transform(const ScalerState& state, const LabeledMatrix& input);

// x * std + mean per column; columns must align with kept_columns.
Matrix InverseTransform(const ScalerState& state, const Matrix& standardized);

}  // namespace fastqspr::prep

#endif  // FASTQSPR_PREPROCESS_SCALER_H_
