// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <spdlog/spdlog.h>

#include "fastqspr/common/missing.h"

namespace fastqspr::metrics {
namespace {

void CheckPair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw MetricError("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (a.empty()) throw MetricError("metrics need at least one value");
}

double Mean(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

// Observed (non-missing truth) entries of one column.
std::pair<std::vector<double>, std::vector<double>> ObservedColumn(const Matrix& pred, const Matrix& truth,
                                                                   Eigen::Index col) {
  std::vector<double> p;
  std::vector<double> t;
  for (Eigen::Index r = 0; r < truth.rows(); ++r) {
    if (IsMissing(truth(r, col))) continue;
    p.push_back(pred(r, col));
    t.push_back(truth(r, col));
  }
  return {p, t};
}

void CheckShapes(const Matrix& pred, const Matrix& truth) {
  if (pred.rows() != truth.rows() || pred.cols() != truth.cols()) {
    throw MetricError("prediction and truth matrices differ in shape");
  }
}

}  // namespace

double Mae(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) sum += std::abs(pred[i] - truth[i]);
  return sum / pred.size();
}

double Rmse(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) sum += (pred[i] - truth[i]) * (pred[i] - truth[i]);
  return std::sqrt(sum / pred.size());
}

double Mape(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (truth[i] == 0.0) throw MetricError("mape undefined for zero ground truth");
    sum += std::abs((pred[i] - truth[i]) / truth[i]);
  }
  return sum / pred.size();
}

double Wmape(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  double error = 0.0;
  double weight = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    error += std::abs(pred[i] - truth[i]);
    weight += std::abs(truth[i]);
  }
  if (weight == 0.0) throw MetricError("wmape undefined for all-zero ground truth");
  return error / weight;
}

double R2(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  const double mean = Mean(truth);
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    ss_res += (truth[i] - pred[i]) * (truth[i] - pred[i]);
    ss_tot += (truth[i] - mean) * (truth[i] - mean);
  }
  if (ss_tot == 0.0) throw MetricError("r2 undefined for constant ground truth");
  return 1.0 - ss_res / ss_tot;
}

double PearsonR(std::span<const double> pred, std::span<const double> truth) {
  CheckPair(pred, truth);
  const double mp = Mean(pred);
  const double mt = Mean(truth);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sxy += (pred[i] - mp) * (truth[i] - mt);
    sxx += (pred[i] - mp) * (pred[i] - mp);
    syy += (truth[i] - mt) * (truth[i] - mt);
  }
  if (sxx == 0.0 || syy == 0.0) throw MetricError("pearson r undefined for a constant input");
  return sxy / std::sqrt(sxx * syy);
}

double Auroc(std::span<const double> scores, std::span<const double> labels) {
  CheckPair(scores, labels);
  // Rank-sum form with midranks for ties.
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  double positives = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      const double label = labels[order[k]];
      if (label != 0.0 && label != 1.0) throw MetricError("auroc labels must be 0 or 1");
      if (label == 1.0) {
        positive_rank_sum += midrank;
        positives += 1.0;
      }
    }
    i = j;
  }
  const double negatives = static_cast<double>(scores.size()) - positives;
  if (positives == 0.0 || negatives == 0.0) throw MetricError("auroc needs both classes");
  return (positive_rank_sum - positives * (positives + 1.0) / 2.0) / (positives * negatives);
}

double Accuracy(std::span<const double> scores, std::span<const double> labels, double threshold) {
  CheckPair(scores, labels);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double predicted = scores[i] >= threshold ? 1.0 : 0.0;
    correct += predicted == labels[i];
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(scores.size());
}

Aggregate AggregateRepetitions(std::span<const double> values) {
  if (values.empty()) throw MetricError("cannot aggregate zero repetitions");
  Aggregate a;
  a.mean = Mean(values);
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    a.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return a;
}

NamedValues EvaluateRegression(const Matrix& pred, const Matrix& truth) {
  CheckShapes(pred, truth);
  using Fn = double (*)(std::span<const double>, std::span<const double>);
  const std::vector<std::pair<std::string, Fn>> metrics = {
      {"mae", &Mae}, {"rmse", &Rmse}, {"mape", &Mape}, {"wmape", &Wmape}, {"r2", &R2}, {"pearson_r", &PearsonR}};
  NamedValues out;
  for (const auto& [name, fn] : metrics) {
    std::vector<double> per_target;
    for (Eigen::Index c = 0; c < truth.cols(); ++c) {
      const auto [p, t] = ObservedColumn(pred, truth, c);
      if (t.empty()) continue;
      try {
        per_target.push_back(fn(p, t));
      } catch (const MetricError& e) {
        spdlog::warn("{} skipped for target column {}: {}", name, c, e.what());
      }
    }
    out.emplace_back(name, per_target.empty() ? kMissing : Mean(per_target));
  }
  return out;
}

NamedValues EvaluateClassification(const Matrix& scores, const Matrix& labels) {
  CheckShapes(scores, labels);
  std::vector<double> aurocs;
  std::vector<double> all_scores;
  std::vector<double> all_labels;
  for (Eigen::Index c = 0; c < labels.cols(); ++c) {
    const auto [s, l] = ObservedColumn(scores, labels, c);
    all_scores.insert(all_scores.end(), s.begin(), s.end());
    all_labels.insert(all_labels.end(), l.begin(), l.end());
    if (s.empty()) continue;
    try {
      aurocs.push_back(Auroc(s, l));
    } catch (const MetricError& e) {
      spdlog::warn("auroc skipped for label column {}: {}", c, e.what());
    }
  }
  return {{"auroc", aurocs.empty() ? kMissing : Mean(aurocs)},
          {"accuracy", all_scores.empty() ? kMissing : Accuracy(all_scores, all_labels)}};
}

void MetricReport::Add(const NamedValues& repetition) {
  for (const auto& [name, value] : repetition) {
    auto [it, inserted] = values_.try_emplace(name);
    if (inserted) {
      if (repetitions_ > 0) throw MetricError("metric '" + name + "' missing from earlier repetitions");
      names_.push_back(name);
    }
    it->second.push_back(value);
  }
  ++repetitions_;
  for (const auto& name : names_) {
    if (static_cast<int>(values_[name].size()) != repetitions_) {
      throw MetricError("metric '" + name + "' missing from repetition " + std::to_string(repetitions_));
    }
  }
}

Aggregate MetricReport::Summary(const std::string& name) const {
  return AggregateRepetitions(values(name));
}

}  // namespace fastqspr::metrics
