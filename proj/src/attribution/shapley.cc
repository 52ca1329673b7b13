// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/attribution/shapley.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fastqspr/common/parallel.h"
#include "fastqspr/common/rng.h"
#include "fastqspr/neural/network.h"

namespace fastqspr::attr {
namespace {

// Upper bound on rows per forward pass.
constexpr Eigen::Index kMaxBatchRows = 2048;

void CheckOptions(const nn::ModelCheckpoint& model, int permutations, int target) {
  if (permutations < 1) throw std::invalid_argument("permutations must be at least 1");
  if (target < 0 || target >= model.spec.output_dim) {
    throw std::invalid_argument("target index " + std::to_string(target) + " out of range [0, " +
                                std::to_string(model.spec.output_dim) + ")");
  }
}

}  // namespace

std::vector<double> ShapleyStandardized(const nn::ModelCheckpoint& model, std::span<const double> instance,
                                        std::span<const double> baseline, int permutations, std::uint64_t seed,
                                        int target) {
  CheckOptions(model, permutations, target);
  const auto d = static_cast<Eigen::Index>(instance.size());
  if (d != model.spec.input_dim || baseline.size() != instance.size()) {
    throw std::invalid_argument("instance width does not match the network input");
  }
  std::vector<double> phi(instance.size(), 0.0);
  Rng rng(seed);
  std::vector<int> order(instance.size());
  const Eigen::Index per_batch = std::max<Eigen::Index>(1, kMaxBatchRows / (d + 1));

  for (int done = 0; done < permutations;) {
    const int count = static_cast<int>(std::min<Eigen::Index>(per_batch, permutations - done));
    Matrix states(count * (d + 1), d);
    std::vector<std::vector<int>> orders(count);
    for (int p = 0; p < count; ++p) {
      std::iota(order.begin(), order.end(), 0);
      rng.Shuffle(std::span<int>(order));
      orders[p] = order;
      Eigen::Index row = p * (d + 1);
      for (Eigen::Index j = 0; j < d; ++j) states(row, j) = baseline[j];
      for (Eigen::Index k = 0; k < d; ++k) {
        states.row(row + k + 1) = states.row(row + k);
        states(row + k + 1, order[k]) = instance[order[k]];
      }
    }
    const Matrix out = nn::PredictStandardized(model, states);
    for (int p = 0; p < count; ++p) {
      const Eigen::Index row = p * (d + 1);
      for (Eigen::Index k = 0; k < d; ++k) {
        phi[orders[p][k]] += out(row + k + 1, target) - out(row + k, target);
      }
    }
    done += count;
  }
  for (double& v : phi) v /= permutations;
  return phi;
}

std::vector<AttributionResult> AttributeRows(const nn::ModelCheckpoint& model, const LabeledMatrix& raw,
                                             const ShapleyOptions& options, std::size_t workers) {
  nn::CheckManifest(model, raw.columns);
  CheckOptions(model, options.permutations, options.target);
  const Matrix z = prep::Transform(model.feature_scaler, raw).values;
  std::vector<double> baseline(static_cast<std::size_t>(z.cols()), 0.0);
  if (options.raw_baseline) {
    if (options.raw_baseline->size() != model.descriptor_manifest.size()) {
      throw std::invalid_argument("baseline width does not match the descriptor manifest");
    }
    LabeledMatrix b{raw.columns, Matrix(1, raw.cols())};
    for (Eigen::Index c = 0; c < raw.cols(); ++c) b.values(0, c) = (*options.raw_baseline)[c];
    const Matrix zb = prep::Transform(model.feature_scaler, b).values;
    for (Eigen::Index c = 0; c < zb.cols(); ++c) baseline[c] = zb(0, c);
  }

  std::unordered_map<std::string, std::size_t> manifest_index;
  for (std::size_t i = 0; i < model.descriptor_manifest.size(); ++i) {
    manifest_index.emplace(model.descriptor_manifest[i], i);
  }
  Matrix base_row(1, z.cols());
  for (Eigen::Index c = 0; c < z.cols(); ++c) base_row(0, c) = baseline[c];
  const double base_value = nn::PredictStandardized(model, base_row)(0, options.target);
  const Matrix explained = nn::PredictStandardized(model, z);

  std::vector<AttributionResult> results(static_cast<std::size_t>(z.rows()));
  ParallelFor(
      results.size(),
      [&](std::size_t r) {
        const Eigen::Index row = static_cast<Eigen::Index>(r);
        std::vector<double> instance(z.row(row).begin(), z.row(row).end());
        const auto phi = ShapleyStandardized(model, instance, baseline, options.permutations, options.seed + r,
                                             options.target);
        auto& result = results[r];
        result.features = model.descriptor_manifest;
        result.values.assign(model.descriptor_manifest.size(), 0.0);
        for (std::size_t k = 0; k < phi.size(); ++k) {
          result.values[manifest_index.at(model.feature_scaler.kept_columns[k])] = phi[k];
        }
        result.base_value = base_value;
        result.explained_output = explained(row, options.target);
      },
      workers);
  return results;
}

std::vector<AttributionResult> AverageAttributions(const std::vector<std::vector<AttributionResult>>& runs) {
  if (runs.empty()) throw std::invalid_argument("no attribution runs to average");
  std::vector<AttributionResult> mean = runs.front();
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k].size() != mean.size()) throw std::invalid_argument("attribution runs differ in row count");
    for (std::size_t r = 0; r < mean.size(); ++r) {
      if (runs[k][r].features != mean[r].features) {
        throw std::invalid_argument("attribution runs differ in descriptors");
      }
      for (std::size_t i = 0; i < mean[r].values.size(); ++i) mean[r].values[i] += runs[k][r].values[i];
      mean[r].base_value += runs[k][r].base_value;
      mean[r].explained_output += runs[k][r].explained_output;
    }
  }
  const double n = static_cast<double>(runs.size());
  for (auto& row : mean) {
    for (double& v : row.values) v /= n;
    row.base_value /= n;
    row.explained_output /= n;
  }
  return mean;
}

std::vector<Importance> DatasetImportance(const std::vector<AttributionResult>& rows) {
  if (rows.empty()) throw std::invalid_argument("no attributions to rank");
  std::vector<Importance> ranking;
  for (const auto& name : rows.front().features) ranking.push_back({name, 0.0});
  for (const auto& row : rows) {
    if (row.features != rows.front().features) throw std::invalid_argument("rows differ in descriptors");
    for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i].mean_abs_attribution += std::abs(row.values[i]);
  }
  for (auto& entry : ranking) entry.mean_abs_attribution /= static_cast<double>(rows.size());
  std::stable_sort(ranking.begin(), ranking.end(), [](const Importance& a, const Importance& b) {
    return a.mean_abs_attribution > b.mean_abs_attribution;
  });
  return ranking;
}

}  // namespace fastqspr::attr
