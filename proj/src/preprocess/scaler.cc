// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/preprocess/scaler.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "fastqspr/common/missing.h"

namespace fastqspr::prep {
namespace {

struct ColumnStats {
  int observed = 0;
  double mean = 0.0;
  double std = 0.0;  // sample std; 0 when fewer than two observations
};

ColumnStats Stats(const Matrix& m, Eigen::Index col) {
  ColumnStats s;
  double sum = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (!IsMissing(m(r, col))) {
      sum += m(r, col);
      ++s.observed;
    }
  }
  if (s.observed == 0) return s;
  s.mean = sum / s.observed;
  if (s.observed < 2) return s;
  double ss = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (!IsMissing(m(r, col))) ss += (m(r, col) - s.mean) * (m(r, col) - s.mean);
  }
  s.std = std::sqrt(ss / (s.observed - 1));
  return s;
}

void RequireRows(const LabeledMatrix& train) {
  if (train.rows() == 0) throw ScalerError("cannot fit a scaler on an empty training matrix");
  if (static_cast<Eigen::Index>(train.columns.size()) != train.cols()) {
    throw ScalerError("column names do not match matrix width");
  }
}

}  // namespace

ScalerState FitFeatures(const LabeledMatrix& train, std::optional<double> clamp_bound) {
  RequireRows(train);
  if (clamp_bound && !(*clamp_bound > 0.0)) throw ScalerError("clamp bound must be positive");
  ScalerState state;
  state.clamp_bound = clamp_bound;
  for (Eigen::Index c = 0; c < train.cols(); ++c) {
    const auto s = Stats(train.values, c);
    // Relative threshold so that columns equal up to rounding count as constant.
    if (s.observed == 0 || !(s.std > 1e-12 * std::max(1.0, std::abs(s.mean)))) continue;
    state.kept_columns.push_back(train.columns[c]);
    state.means.push_back(s.mean);
    state.stds.push_back(s.std);
  }
  return state;
}

ScalerState FitTargets(const LabeledMatrix& train) {
  RequireRows(train);
  ScalerState state;
  state.target_flag = true;
  for (Eigen::Index c = 0; c < train.cols(); ++c) {
    const auto s = Stats(train.values, c);
    if (s.observed == 0) throw ScalerError("target '" + train.columns[c] + "' has no observed values");
    state.kept_columns.push_back(train.columns[c]);
    state.means.push_back(s.mean);
    state.stds.push_back(s.std > 0.0 ? s.std : 1.0);
  }
  return state;
}

ScalerState IdentityScaler(const std::vector<std::string>& columns, bool target_flag) {
  ScalerState state;
  state.kept_columns = columns;
  state.means.assign(columns.size(), 0.0);
  state.stds.assign(columns.size(), 1.0);
  state.target_flag = target_flag;
  return state;
}

LabeledMatrix Transform(const ScalerState& state, const LabeledMatrix& input) {
  std::unordered_map<std::string, Eigen::Index> index;
  for (std::size_t c = 0; c < input.columns.size(); ++c) index.emplace(input.columns[c], c);
  std::vector<Eigen::Index> source;
  std::string missing;
  for (const auto& name : state.kept_columns) {
    const auto it = index.find(name);
    if (it == index.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
    } else {
      source.push_back(it->second);
    }
  }
  if (!missing.empty()) throw ScalerError("input lacks fitted columns: " + missing);

  LabeledMatrix out{state.kept_columns, Matrix(input.rows(), static_cast<Eigen::Index>(source.size()))};
  for (Eigen::Index r = 0; r < input.rows(); ++r) {
    for (std::size_t k = 0; k < source.size(); ++k) {
      const double x = input.values(r, source[k]);
      double z;
      if (IsMissing(x)) {
        z = state.target_flag ? kMissing : 0.0;
      } else {
        z = (x - state.means[k]) / state.stds[k];
        if (state.clamp_bound) z = std::clamp(z, -*state.clamp_bound, *state.clamp_bound);
      }
      out.values(r, static_cast<Eigen::Index>(k)) = z;
    }
  }
  return out;
}

Matrix InverseTransform(const ScalerState& state, const Matrix& standardized) {
  if (standardized.cols() != static_cast<Eigen::Index>(state.kept_columns.size())) {
    throw ScalerError("inverse transform expects " + std::to_string(state.kept_columns.size()) +
                      " columns, got " + std::to_string(standardized.cols()));
  }
  Matrix out(standardized.rows(), standardized.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      out(r, c) = standardized(r, c) * state.stds[c] + state.means[c];
    }
  }
  return out;
}

}  // namespace fastqspr::prep
