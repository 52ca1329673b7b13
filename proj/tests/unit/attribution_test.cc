// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fastqspr/attribution/shapley.h"
#include "support/shapley_oracles.h"

namespace fastqspr::attr {
namespace {

using fastqspr::testing::MakeRandomCheckpoint;

nn::ModelCheckpoint IdentityLinear(const std::vector<double>& weights) {
  nn::ModelCheckpoint m;
  const int d = static_cast<int>(weights.size());
  m.spec = {.input_dim = d, .hidden_layers = 0, .hidden_width = 0, .output_dim = 1};
  m.params.layers.push_back({Matrix(d, 1), nn::RowVector::Constant(1, 0.3)});
  for (int i = 0; i < d; ++i) {
    m.params.layers[0].weights(i, 0) = weights[i];
    m.descriptor_manifest.push_back("d" + std::to_string(i));
  }
  m.feature_scaler = prep::IdentityScaler(m.descriptor_manifest, false);
  m.target_scaler = prep::IdentityScaler({"y"}, true);
  return m;
}

TEST(ShapleyTest, LinearModelIsExactForAnyPermutationCount) {
  const auto summary = fastqspr::testing::RunShapleyChecks(60, 31);
  EXPECT_EQ(summary.linear_checkpoints, 30);
  EXPECT_LT(summary.linear_worst, 1e-10);
}

TEST(ShapleyTest, EfficiencyHoldsForEveryCheckpoint) {
  const auto summary = fastqspr::testing::RunShapleyChecks(60, 32);
  EXPECT_LT(summary.efficiency_worst, 64 * std::numeric_limits<double>::epsilon());
}

TEST(ShapleyTest, BaselineInstanceGetsZeroAttribution) {
  Rng rng(3);
  auto rc = MakeRandomCheckpoint(rng, 2, 1);
  for (int c = 0; c < rc.raw.cols(); ++c) rc.raw.values(0, c) = rc.model.feature_scaler.means[c];
  const auto res = AttributeRows(rc.model, rc.raw, {.permutations = 16, .seed = 1});
  for (double v : res[0].values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(res[0].explained_output, res[0].base_value);
}

TEST(ShapleyTest, DummyFeatureGetsZero) {
  Rng rng(4);
  auto rc = MakeRandomCheckpoint(rng, 2, 5);
  rc.model.params.layers[0].weights.row(0).setZero();
  const auto res = AttributeRows(rc.model, rc.raw, {.permutations = 20, .seed = 9});
  for (const auto& row : res) EXPECT_EQ(row.values[0], 0.0);
}

TEST(ShapleyTest, DroppedColumnsGetZeroAndKeepManifestOrder) {
  auto m = IdentityLinear({2.0, -1.0});
  m.descriptor_manifest = {"d0", "constant", "d1"};
  LabeledMatrix raw{m.descriptor_manifest, Matrix(1, 3)};
  raw.values << 1.5, 7.0, 2.0;
  const auto res = AttributeRows(m, raw, {.permutations = 3});
  ASSERT_EQ(res[0].features, m.descriptor_manifest);
  EXPECT_DOUBLE_EQ(res[0].values[0], 3.0);
  EXPECT_EQ(res[0].values[1], 0.0);
  EXPECT_DOUBLE_EQ(res[0].values[2], -2.0);
  EXPECT_DOUBLE_EQ(res[0].base_value, 0.3);
  EXPECT_DOUBLE_EQ(res[0].explained_output, 1.3);
}

TEST(ShapleyTest, RawBaselineOverride) {
  const auto m = IdentityLinear({2.0, -1.0});
  LabeledMatrix raw{m.descriptor_manifest, Matrix(1, 2)};
  raw.values << 1.0, 1.0;
  ShapleyOptions options{.permutations = 4, .raw_baseline = std::vector<double>{1.0, 0.0}};
  const auto res = AttributeRows(m, raw, options);
  EXPECT_DOUBLE_EQ(res[0].values[0], 0.0);
  EXPECT_DOUBLE_EQ(res[0].values[1], -1.0);
}

TEST(ShapleyTest, SymmetricDuplicatedFeaturesShareCredit) {
  // f = relu(x0 + x1) with both inputs equal: exact values are equal.
  nn::ModelCheckpoint m;
  m.spec = {.input_dim = 2, .hidden_layers = 1, .hidden_width = 1, .output_dim = 1};
  m.params.layers = {{Matrix::Ones(2, 1), nn::RowVector::Zero(1)}, {Matrix::Ones(1, 1), nn::RowVector::Zero(1)}};
  m.descriptor_manifest = {"a", "a_copy"};
  m.feature_scaler = prep::IdentityScaler(m.descriptor_manifest, false);
  m.target_scaler = prep::IdentityScaler({"y"}, true);
  LabeledMatrix raw{m.descriptor_manifest, Matrix(1, 2)};
  raw.values << 1.7, 1.7;
  const auto res = AttributeRows(m, raw, {.permutations = 400, .seed = 5});
  EXPECT_NEAR(res[0].values[0], res[0].values[1], 0.15);
  EXPECT_NEAR(res[0].values[0] + res[0].values[1], 3.4, 1e-12);
}

TEST(ShapleyTest, DeterministicAndIndependentOfWorkers) {
  Rng rng(6);
  const auto rc = MakeRandomCheckpoint(rng, 2, 9);
  const ShapleyOptions options{.permutations = 7, .seed = 123};
  const auto a = AttributeRows(rc.model, rc.raw, options, 1);
  const auto b = AttributeRows(rc.model, rc.raw, options, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r) EXPECT_EQ(a[r].values, b[r].values);
  // Row r is explained with seed + r.
  LabeledMatrix third{rc.raw.columns, rc.raw.values.middleRows(2, 1)};
  const auto single = AttributeRows(rc.model, third, {.permutations = 7, .seed = 125});
  EXPECT_EQ(single[0].values, a[2].values);
}

TEST(ShapleyTest, InvalidRequestsAreRejected) {
  const auto m = IdentityLinear({1.0, 2.0});
  LabeledMatrix raw{m.descriptor_manifest, Matrix::Zero(1, 2)};
  EXPECT_THROW(AttributeRows(m, raw, {.permutations = 0}), std::invalid_argument);
  EXPECT_THROW(AttributeRows(m, raw, {.target = 1}), std::invalid_argument);
  LabeledMatrix wrong{{"d0", "x"}, Matrix::Zero(1, 2)};
  EXPECT_THROW(AttributeRows(m, wrong, {}), nn::NetworkError);
}

TEST(ImportanceTest, RanksByMeanAbsoluteAttribution) {
  const auto m = IdentityLinear({0.0, 0.0, 4.0, 0.0});
  Rng rng(8);
  LabeledMatrix raw{m.descriptor_manifest, fastqspr::testing::GaussianMatrix(rng, 10, 4)};
  const auto rows = AttributeRows(m, raw, {.permutations = 5, .seed = 2});
  const auto ranking = DatasetImportance(rows);
  ASSERT_EQ(ranking.size(), 4u);
  EXPECT_EQ(ranking[0].descriptor, "d2");
  EXPECT_GT(ranking[0].mean_abs_attribution, 0.0);
  EXPECT_EQ(ranking[1].descriptor, "d0");  // ties keep manifest order
  EXPECT_EQ(ranking, DatasetImportance(AttributeRows(m, raw, {.permutations = 5, .seed = 2})));
}

TEST(ImportanceTest, AveragingAcrossCheckpoints) {
  const auto a = IdentityLinear({1.0, 0.0});
  const auto b = IdentityLinear({3.0, 2.0});
  LabeledMatrix raw{a.descriptor_manifest, Matrix(1, 2)};
  raw.values << 1.0, 1.0;
  const auto mean = AverageAttributions({AttributeRows(a, raw, {}), AttributeRows(b, raw, {})});
  EXPECT_DOUBLE_EQ(mean[0].values[0], 2.0);
  EXPECT_DOUBLE_EQ(mean[0].values[1], 1.0);
}

}  // namespace
}  // namespace fastqspr::attr
