// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fastqspr/common/missing.h"
#include "fastqspr/common/rng.h"
#include "fastqspr/metrics/metrics.h"
#include "support/metric_oracles.h"

namespace fastqspr::metrics {
namespace {

using V = std::vector<double>;

TEST(RegressionMetricsTest, Examples) {
  EXPECT_EQ(Mae(V{1, 2}, V{1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(Mae(V{0, 0}, V{1, 3}), 2.0);
  EXPECT_EQ(Rmse(V{1, 2}, V{1, 2}), 0.0);
  EXPECT_NEAR(Rmse(V{0, 0}, V{3, 4}), 3.5355, 5e-5);
  EXPECT_DOUBLE_EQ(Mape(V{110}, V{100}), 0.10);
  EXPECT_DOUBLE_EQ(Mape(V{90}, V{100}), 0.10);
  EXPECT_EQ(Mape(V{5, -2}, V{5, -2}), 0.0);
  EXPECT_DOUBLE_EQ(Wmape(V{110}, V{100}), 0.10);
  EXPECT_DOUBLE_EQ(Wmape(V{0, 20}, V{10, 10}), 1.0);
  EXPECT_DOUBLE_EQ(R2(V{1, 2, 3}, V{1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(R2(V{2, 2, 2}, V{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(PearsonR(V{1, 2, 3}, V{2, 4, 6}), 1.0);
}

TEST(RegressionMetricsTest, Errors) {
  EXPECT_THROW(Mae(V{1}, V{1, 2}), MetricError);
  EXPECT_THROW(Rmse(V{}, V{}), MetricError);
  EXPECT_THROW(Mape(V{1, 2}, V{0, 2}), MetricError);
  EXPECT_THROW(Wmape(V{1, 2}, V{0, 0}), MetricError);
  EXPECT_THROW(R2(V{1, 2}, V{3, 3}), MetricError);
}

TEST(RegressionMetricsTest, WmapeEqualsMapeForEqualMagnitudes) {
  const V truth{4, -4, 4, -4};
  const V pred{5, -2, 4.5, 0};
  EXPECT_NEAR(Wmape(pred, truth), Mape(pred, truth), 1e-15);
}

TEST(RegressionMetricsTest, MatchDirectSummationOracle) {
  const auto summary = fastqspr::testing::RunMetricOracles(300, 17);
  EXPECT_LT(summary.regression_worst, 1e-12);
  EXPECT_LT(summary.auroc_worst, 1e-12);
}

TEST(RegressionMetricsTest, RmseDominatesMaeAndR2IsAffineInvariant) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.UniformIndex(50);
    V p(n);
    V t(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = rng.Uniform(-10, 10);
      t[i] = rng.Uniform(-10, 10);
    }
    EXPECT_GE(Rmse(p, t), Mae(p, t) - 1e-15);
    const double a = rng.Uniform(0.5, 3.0) * (trial % 2 ? -1.0 : 1.0);
    const double b = rng.Uniform(-5, 5);
    V pa(n);
    V ta(n);
    for (std::size_t i = 0; i < n; ++i) {
      pa[i] = a * p[i] + b;
      ta[i] = a * t[i] + b;
    }
    EXPECT_NEAR(R2(pa, ta), R2(p, t), 1e-9 * std::max(1.0, std::abs(R2(p, t))));
  }
}

TEST(ClassificationMetricsTest, Examples) {
  EXPECT_DOUBLE_EQ(Auroc(V{0.9, 0.1}, V{1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(Auroc(V{0.3, 0.3, 0.3, 0.3}, V{1, 0, 1, 0}), 0.5);
  EXPECT_THROW(Auroc(V{0.3, 0.4}, V{1, 1}), MetricError);
  EXPECT_THROW(Auroc(V{0.3, 0.4}, V{1, 2}), MetricError);
  EXPECT_DOUBLE_EQ(Accuracy(V{0.9, 0.1}, V{1, 0}), 100.0);
  EXPECT_DOUBLE_EQ(Accuracy(V{0.9, 0.9}, V{1, 0}), 50.0);
  EXPECT_DOUBLE_EQ(Accuracy(V{0.5}, V{1}), 100.0);
}

TEST(ClassificationMetricsTest, AurocMatchesPairwiseOracle) {
  const auto summary = fastqspr::testing::RunMetricOracles(1000, 99);
  EXPECT_EQ(summary.auroc_instances, 1000);
  EXPECT_LT(summary.auroc_worst, 1e-12);
}

TEST(AggregateTest, MeanAndSampleStd) {
  const auto a = AggregateRepetitions(V{1, 2, 3});
  EXPECT_DOUBLE_EQ(a.mean, 2.0);
  EXPECT_DOUBLE_EQ(a.std, 1.0);
  const auto single = AggregateRepetitions(V{5});
  EXPECT_DOUBLE_EQ(single.mean, 5.0);
  EXPECT_EQ(single.std, 0.0);
  const auto b = AggregateRepetitions(V{3, 1, 2});
  EXPECT_DOUBLE_EQ(b.mean, a.mean);
  EXPECT_DOUBLE_EQ(b.std, a.std);
  EXPECT_THROW(AggregateRepetitions(V{}), MetricError);
}

TEST(EvaluateTest, MultitaskRegressionSkipsMissingTruth) {
  Matrix pred(3, 2);
  Matrix truth(3, 2);
  pred << 1, 10, 2, 20, 4, 99;
  truth << 1, 10, 3, 20, 5, kMissing;
  const auto values = EvaluateRegression(pred, truth);
  ASSERT_EQ(values.size(), 6u);
  EXPECT_EQ(values[0].first, "mae");
  EXPECT_DOUBLE_EQ(values[0].second, (Mae(V{1, 2, 4}, V{1, 3, 5}) + 0.0) / 2.0);
  EXPECT_EQ(values[4].first, "r2");
}

TEST(EvaluateTest, MacroAurocSkipsSingleClassLabels) {
  Matrix scores(4, 2);
  Matrix labels(4, 2);
  scores << 0.9, 0.2, 0.1, 0.7, 0.8, 0.6, 0.3, 0.4;
  labels << 1, 1, 0, 1, 1, 1, 0, kMissing;
  const auto values = EvaluateClassification(scores, labels);
  EXPECT_EQ(values[0].first, "auroc");
  EXPECT_DOUBLE_EQ(values[0].second, 1.0);
  EXPECT_EQ(values[1].first, "accuracy");
  EXPECT_DOUBLE_EQ(values[1].second, 100.0 * 6 / 7);
}

TEST(MetricReportTest, CollectsRepetitions) {
  MetricReport report;
  report.Add({{"mae", 1.0}, {"r2", 0.5}});
  report.Add({{"mae", 3.0}, {"r2", 0.7}});
  EXPECT_EQ(report.repetitions(), 2);
  EXPECT_EQ(report.names(), (std::vector<std::string>{"mae", "r2"}));
  EXPECT_DOUBLE_EQ(report.Summary("mae").mean, 2.0);
  EXPECT_THROW(report.Add({{"mae", 1.0}}), MetricError);
}

}  // namespace
}  // namespace fastqspr::metrics
