// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/neural/model.h"

#include <set>

namespace fastqspr::nn {
namespace {

std::string Join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

Matrix PredictStandardized(const ModelCheckpoint& model, const Matrix& standardized) {
  const Matrix out = Forward(model.params, model.spec, standardized);
  if (model.spec.task == Task::kMultilabelClassification) return out;
  return prep::InverseTransform(model.target_scaler, out);
}

void CheckManifest(const ModelCheckpoint& model, const std::vector<std::string>& columns) {
  if (columns != model.descriptor_manifest) {
    const std::set<std::string> have(columns.begin(), columns.end());
    const std::set<std::string> want(model.descriptor_manifest.begin(), model.descriptor_manifest.end());
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    for (const auto& n : model.descriptor_manifest) {
      if (!have.contains(n)) missing.push_back(n);
    }
    for (const auto& n : columns) {
      if (!want.contains(n)) extra.push_back(n);
    }
    std::string message = "descriptor columns do not match the checkpoint manifest";
    if (!missing.empty()) message += "; missing: " + Join(missing);
    if (!extra.empty()) message += "; extra: " + Join(extra);
    if (missing.empty() && extra.empty()) message += "; columns are out of order";
    throw NetworkError(message);
  }
}

Matrix Predict(const ModelCheckpoint& model, const LabeledMatrix& raw_features) {
  CheckManifest(model, raw_features.columns);
  return PredictStandardized(model, prep::Transform(model.feature_scaler, raw_features).values);
}

}  // namespace fastqspr::nn
