// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_NEURAL_MODEL_H_
#define FASTQSPR_NEURAL_MODEL_H_

#include <string>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/neural/network.h"
#include "fastqspr/preprocess/scaler.h"

namespace fastqspr::nn {

// Everything needed to turn raw descriptor rows into predictions.
struct ModelCheckpoint {
  NetworkSpec spec;
  NetworkParameters params;
  std::string descriptor_set;
  std::string catalogue_version;
  // Raw descriptor columns, in order, that prediction inputs must supply.
  std::vector<std::string> descriptor_manifest;
  std::vector<std::string> target_names;
  prep::ScalerState feature_scaler;
  prep::ScalerState target_scaler;

  bool operator==(const ModelCheckpoint&) const = default;
};

// Throws NetworkError naming missing and extra columns unless `columns`
// equals the checkpoint's descriptor manifest.
void CheckManifest(const ModelCheckpoint& model, const std::vector<std::string>& columns);

// Raw descriptors -> frozen scaler -> network -> target units (regression)
// or probabilities (classification). Input columns must be exactly the
// manifest; otherwise NetworkError names the missing and extra columns.
Matrix Predict(const ModelCheckpoint& model, const LabeledMatrix& raw_features);

// Network outputs for already standardized features, mapped to target units
// (regression) or probabilities (classification).
Matrix PredictStandardized(const ModelCheckpoint& model, const Matrix& standardized);

}  // namespace fastqspr::nn

#endif  // FASTQSPR_NEURAL_MODEL_H_
