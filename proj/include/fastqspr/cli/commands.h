// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_CLI_COMMANDS_H_
#define FASTQSPR_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fastqspr/attribution/shapley.h"
#include "fastqspr/cli/config.h"
#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/datasetio/dataset.h"
#include "fastqspr/datasetio/split.h"
#include "fastqspr/metrics/metrics.h"

namespace fastqspr::cli {

struct TrainSummary {
  metrics::MetricReport report;  // test split, target units; mape/wmape as fractions
  std::vector<std::filesystem::path> checkpoints;
  std::vector<io::SplitIndices> splits;
  std::vector<int> best_epochs;
  io::DropReport drops;
  int rows = 0;
  bool cache_hit = false;
};

// Featurize, then for each repetition i (seed random_seed + i): split, fit
// scalers on the training rows, train, evaluate the test rows and write
// checkpoint_<i>. Also writes config_snapshot, report.txt, report.csv and
// dropped_rows.csv to the output directory.
TrainSummary RunTrain(const RunConfig& config, std::size_t workers = 0);

// Metric values as written to the reports (mape and wmape become percentages).
double ReportedValue(const std::string& metric, double value);

struct PredictOptions {
  std::filesystem::path checkpoint_dir;
  std::filesystem::path input;
  std::filesystem::path output;  // default: <checkpoint_dir>/predictions.csv
  std::string smiles_column;     // default: the column used for training
  std::size_t workers = 0;
};

struct PredictSummary {
  std::filesystem::path output;
  int rows = 0;
  int invalid_rows = 0;
  int checkpoints = 0;
  // rows x targets; NaN for invalid rows.
  Matrix ensemble;
  std::vector<Matrix> per_checkpoint;
};

// Columns: [identifier,] smiles, status, then per target the ensemble mean
// followed by one column per checkpoint.
PredictSummary RunPredict(const PredictOptions& options);

struct ShapOptions {
  std::filesystem::path checkpoint_dir;
  std::filesystem::path input;
  std::filesystem::path output_dir;  // default: checkpoint_dir
  std::string smiles_column;
  int permutations = attr::kDefaultPermutations;
  std::uint64_t seed = 0;
  std::string target;  // default: first target
  std::size_t workers = 0;
};

struct ShapSummary {
  std::vector<attr::AttributionResult> rows;  // averaged across checkpoints
  std::vector<attr::Importance> importance;
  std::vector<std::string> smiles;
  int skipped_rows = 0;
  int checkpoints = 0;
};

// Writes importance.csv and attributions.csv.
ShapSummary RunShap(const ShapOptions& options);

}  // namespace fastqspr::cli

#endif  // FASTQSPR_CLI_COMMANDS_H_
