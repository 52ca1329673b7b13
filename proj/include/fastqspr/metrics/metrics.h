// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_METRICS_METRICS_H_
#define FASTQSPR_METRICS_METRICS_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"

namespace fastqspr::metrics {

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All pairwise metrics require equal, non-zero lengths.
double Mae(std::span<const double> pred, std::span<const double> truth);
double Rmse(std::span<const double> pred, std::span<const double> truth);
// Fractions, not percentages.
double Mape(std::span<const double> pred, std::span<const double> truth);
double Wmape(std::span<const double> pred, std::span<const double> truth);
double R2(std::span<const double> pred, std::span<const double> truth);
double PearsonR(std::span<const double> pred, std::span<const double> truth);
// Labels are 0/1; ties count one half.
double Auroc(std::span<const double> scores, std::span<const double> labels);
// Percentage of entries whose thresholded score (>= threshold is positive)
// equals the label.
double Accuracy(std::span<const double> scores, std::span<const double> labels, double threshold = 0.5);

struct Aggregate {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for one value
};
Aggregate AggregateRepetitions(std::span<const double> values);

using NamedValues = std::vector<std::pair<std::string, double>>;

// Per-target metrics over observed entries, averaged across target columns.
// A metric undefined for some column (zero truth for mape, constant truth
// for r2) is left out of that column's average; if undefined everywhere it
// is reported as missing.
NamedValues EvaluateRegression(const Matrix& pred, const Matrix& truth);
// Macro AUROC over labels with both classes (others skipped with a
// warning) and accuracy over all observed label entries.
NamedValues EvaluateClassification(const Matrix& scores, const Matrix& labels);

// Metric values across repetitions, in first-seen metric order.
class MetricReport {
 public:
  void Add(const NamedValues& repetition);

  int repetitions() const { return repetitions_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& values(const std::string& name) const { return values_.at(name); }
  Aggregate Summary(const std::string& name) const;

 private:
  int repetitions_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::vector<double>> values_;
};

}  // namespace fastqspr::metrics

#endif  // FASTQSPR_METRICS_METRICS_H_
