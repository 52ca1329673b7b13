// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "fastqspr/cli/commands.h"
#include "fastqspr/cli/config.h"
#include "fastqspr/common/rng.h"
#include "fastqspr/datasetio/checkpoint.h"
#include "fastqspr/datasetio/split.h"
#include "fastqspr/descriptors/catalogue.h"
#include "fastqspr/neural/model.h"
#include "fastqspr/neural/trainer.h"
#include "fastqspr/preprocess/scaler.h"
#include "support/descriptor_oracles.h"
#include "support/metric_oracles.h"
#include "support/nn_oracles.h"
#include "support/shapley_oracles.h"
#include "support/temp_dir.h"

namespace fastqspr {
namespace {

namespace fs = std::filesystem;

// Pinned thresholds.
constexpr double kPahMinR2 = 0.90;
constexpr double kPahMaxMae = 0.50;
constexpr int kPahRepetitions = 8;
constexpr double kBaselineMargin = 0.02;
constexpr int kExpectedTrainRows = 44;
constexpr double kDescriptorTol = 1e-10;
constexpr int kOracleMaxVertices = 12;
constexpr int kGradientNetworks = 120;
constexpr double kGradientTol = 1e-4;
constexpr double kLeastSquaresTol = 0.05;
constexpr int kAurocInstances = 1000;
constexpr double kAurocTol = 1e-12;
constexpr double kRegressionMetricTol = 1e-12;
constexpr int kShapleyCheckpoints = 60;
constexpr double kShapleyLinearTol = 1e-10;
constexpr double kEfficiencyTol = 64 * std::numeric_limits<double>::epsilon();
constexpr double kScalerRoundTripTol = 1e-10;

const fs::path kDataDir = FASTQSPR_DATA_DIR;
const fs::path kCliPath = FASTQSPR_CLI_PATH;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void Report(const std::string& name, const std::function<Outcome()>& check) {
  Outcome outcome;
  try {
    outcome = check();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  if (!outcome.pass) ++failures;
  std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
  std::fflush(stdout);
}

cli::RunConfig PahConfig(const fs::path& work, const std::string& run) {
  auto config = cli::LoadConfig(kDataDir / "pah" / "pah.yml");
  config.input_file = (work / "pah_logp.csv").string();
  config.output_directory = (work / run).string();
  return config;
}

struct PahRuns {
  cli::TrainSummary fnn;
  cli::TrainSummary linear;
  double fnn_seconds = 0.0;
};

Outcome PahReproduction(const PahRuns& runs) {
  const auto r2 = runs.fnn.report.Summary("r2");
  const auto mae = runs.fnn.report.Summary("mae");
  const bool pass = runs.fnn.report.repetitions() == kPahRepetitions && r2.mean >= kPahMinR2 && mae.mean <= kPahMaxMae;
  return {pass, fmt::format("{} repetitions, mean R2 {:.4f} +/- {:.4f} (need >= {}), mean MAE {:.4f} +/- {:.4f} "
                            "(need <= {}), {:.0f} s",
                            runs.fnn.report.repetitions(), r2.mean, r2.std, kPahMinR2, mae.mean, mae.std, kPahMaxMae,
                            runs.fnn_seconds)};
}

Outcome BaselineOrdering(const PahRuns& runs) {
  const auto& report = runs.linear.report;
  bool complete = report.repetitions() == kPahRepetitions;
  for (const char* m : {"mae", "rmse", "mape", "wmape", "r2", "pearson_r"}) {
    const auto& names = report.names();
    complete = complete && std::find(names.begin(), names.end(), m) != names.end() &&
               std::isfinite(report.Summary(m).mean);
  }
  const double fnn = runs.fnn.report.Summary("r2").mean;
  const double linear = report.Summary("r2").mean;
  return {complete && fnn >= linear - kBaselineMargin,
          fmt::format("FNN mean R2 {:.4f}, zero-layer mean R2 {:.4f} +/- {:.4f}, all metrics reported: {}", fnn,
                      linear, report.Summary("r2").std, complete ? "yes" : "no")};
}

Outcome SplitExactness() {
  int wrong = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto s = io::RandomSplit(55, {0.8, 0.1, 0.1}, seed);
    std::set<int> all(s.train.begin(), s.train.end());
    all.insert(s.val.begin(), s.val.end());
    all.insert(s.test.begin(), s.test.end());
    const bool ok = static_cast<int>(s.train.size()) == kExpectedTrainRows && all.size() == 55 && *all.begin() == 0 &&
                    *all.rbegin() == 54;
    wrong += ok ? 0 : 1;
  }
  return {wrong == 0, fmt::format("{} training rows of 55 on 1000 seeds, disjoint and exhaustive; {} failures",
                                  kExpectedTrainRows, wrong)};
}

Outcome DescriptorOracles() {
  auto corpus = testing::SmallGraphFamilies(kOracleMaxVertices);
  for (const auto& s : testing::SmilesColumn((kDataDir / "pah" / "pah_logp.csv").string())) {
    corpus.emplace_back(s, mol::ParseSmiles(s));
  }
  int comparisons = 0;
  double worst = 0.0;
  std::string first_failure;
  for (const auto& [label, graph] : corpus) {
    for (const auto& c : testing::CompareWithOracle(graph)) {
      ++comparisons;
      if (!c.Matches(kDescriptorTol) && first_failure.empty()) first_failure = label + " " + c.name;
      if (!std::isnan(c.implemented) && !std::isnan(c.oracle)) {
        worst = std::max(worst, std::abs(c.implemented - c.oracle));
      }
    }
  }
  return {first_failure.empty(), fmt::format("{} molecules, {} index comparisons, max deviation {:.3g}{}",
                                             corpus.size(), comparisons, worst,
                                             first_failure.empty() ? "" : ", first mismatch " + first_failure)};
}

Outcome GradientSuite() {
  const auto s = testing::RunGradientChecks(kGradientNetworks, 2024);
  return {s.instances >= 100 && s.worst < kGradientTol,
          fmt::format("{} networks, max relative error {:.3g} (need < {})", s.instances, s.worst, kGradientTol)};
}

Outcome LeastSquaresEquivalence() {
  Rng rng(77);
  auto make = [&](int rows) {
    std::pair<Matrix, Matrix> d{testing::GaussianMatrix(rng, rows, 2), Matrix(rows, 1)};
    for (int r = 0; r < rows; ++r) {
      d.second(r, 0) = 3 * d.first(r, 0) - 2 * d.first(r, 1) + 0.1 * testing::Gaussian(rng);
    }
    return d;
  };
  const auto [x, y] = make(400);
  const auto [vx, vy] = make(100);
  const nn::NetworkSpec spec{.input_dim = 2, .hidden_layers = 0, .hidden_width = 0, .output_dim = 1};
  const nn::TrainConfig config{.number_epochs = 300, .batch_size = 32, .patience = 300, .learning_rate = 0.01,
                               .random_seed = 55};
  const auto result = nn::TrainModel(spec, config, x, y, vx, vy);
  const auto ols = testing::LeastSquares(x, y.col(0));
  const auto& w = result.params.layers[0].weights;
  const double dev = std::max(std::abs(w(0, 0) - ols[0]), std::abs(w(1, 0) - ols[1]));
  return {dev <= kLeastSquaresTol, fmt::format("weights ({:.4f}, {:.4f}) vs closed form ({:.4f}, {:.4f}), max "
                                               "deviation {:.2g} (need <= {})",
                                               w(0, 0), w(1, 0), ols[0], ols[1], dev, kLeastSquaresTol)};
}

Outcome MetricOracles() {
  const auto s = testing::RunMetricOracles(kAurocInstances, 99);
  const bool pass = s.auroc_instances >= kAurocInstances && s.auroc_worst <= kAurocTol &&
                    s.regression_worst <= kRegressionMetricTol;
  return {pass, fmt::format("AUROC {} instances max deviation {:.3g}; regression metrics {} instances max "
                            "deviation {:.3g}",
                            s.auroc_instances, s.auroc_worst, s.regression_instances, s.regression_worst)};
}

Outcome ShapleyExactness() {
  const auto s = testing::RunShapleyChecks(kShapleyCheckpoints, 31);
  return {s.linear_worst <= kShapleyLinearTol && s.efficiency_worst <= kEfficiencyTol,
          fmt::format("{} zero-layer checkpoints max deviation {:.3g}; efficiency over {} checkpoints max {:.3g} "
                      "(limit {:.3g})",
                      s.linear_checkpoints, s.linear_worst, s.checkpoints, s.efficiency_worst, kEfficiencyTol)};
}

Outcome Determinism(const fs::path& work) {
  const fs::path config = kDataDir / "pah" / "pah.yml";
  std::vector<fs::path> dirs = {work / "det_a", work / "det_b"};
  for (const auto& dir : dirs) {
    const std::string command =
        fmt::format("\"{}\" -q train \"{}\" --input-file \"{}\" --output-directory \"{}\" > /dev/null",
                    kCliPath.string(), config.string(), (work / "pah_logp.csv").string(), dir.string());
    if (std::system(command.c_str()) != 0) return {false, "train invocation failed: " + command};
  }
  bool same = true;
  for (const char* name : {"report.txt", "report.csv"}) {
    same = same && testing::ReadText(dirs[0] / name) == testing::ReadText(dirs[1] / name);
  }
  return {same, fmt::format("two CLI train runs: report.txt and report.csv {}", same ? "byte-identical" : "differ")};
}

Outcome RoundTrips(const fs::path& work, const PahRuns& runs) {
  Rng rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    LabeledMatrix x;
    const int cols = 1 + static_cast<int>(rng.UniformIndex(6));
    for (int c = 0; c < cols; ++c) x.columns.push_back("c" + std::to_string(c));
    x.values = testing::GaussianMatrix(rng, 40, cols);
    for (int c = 0; c < cols; ++c) {
      const double scale = rng.Uniform(0.01, 100);
      const double shift = rng.Uniform(-1000, 1000);
      x.values.col(c) = (x.values.col(c).array() * scale + shift).matrix();
    }
    for (const auto& state : {prep::FitFeatures(x), prep::FitTargets(x)}) {
      const Matrix back = prep::InverseTransform(state, prep::Transform(state, x).values);
      worst = std::max(worst, (back - x.values).cwiseAbs().maxCoeff());
    }
  }

  int bit_identical = 0, total = 0;
  auto check = [&](nn::ModelCheckpoint model, const LabeledMatrix& raw, const fs::path& file) {
    model.catalogue_version = std::string(desc::kCatalogueVersion);
    io::SaveCheckpoint({model, {{"k", "v"}}, 1, 0}, file);
    const auto loaded = io::LoadCheckpoint(file).model;
    const Matrix a = nn::Predict(model, raw);
    const Matrix b = nn::Predict(loaded, raw);
    ++total;
    bit_identical += (a.array() == b.array()).all() && loaded == model ? 1 : 0;
  };
  for (int i = 0; i < 20; ++i) {
    const auto rc = testing::MakeRandomCheckpoint(rng, i % 3, 50);
    check(rc.model, rc.raw, work / "roundtrip_checkpoint");
  }
  const auto pah = io::LoadCheckpoint(runs.fnn.checkpoints.front()).model;
  const auto loaded = io::LoadDataset(work / "pah_logp.csv", {"smiles", {"log_p"}, true});
  check(pah, desc::ComputeMatrix(loaded.dataset.molecules, desc::GetDescriptorSet(pah.descriptor_set)),
        work / "roundtrip_pah");
  const bool pass = worst <= kScalerRoundTripTol && bit_identical == total;
  return {pass, fmt::format("scaler inverse max error {:.3g} (need <= {}); {}/{} checkpoints reproduce predictions "
                            "bit-identically",
                            worst, kScalerRoundTripTol, bit_identical, total)};
}

int Main() {
  spdlog::set_level(spdlog::level::warn);
  testing::TempDir work("acceptance");
  fs::copy_file(kDataDir / "pah" / "pah_logp.csv", work.path() / "pah_logp.csv");

  PahRuns runs;
  const auto start = std::chrono::steady_clock::now();
  runs.fnn = cli::RunTrain(PahConfig(work.path(), "fnn"));
  runs.fnn_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto linear = PahConfig(work.path(), "linear");
  linear.hidden_layers = 0;
  runs.linear = cli::RunTrain(linear);

  Report("pah_reproduction", [&] { return PahReproduction(runs); });
  Report("linear_baseline_ordering", [&] { return BaselineOrdering(runs); });
  Report("split_size_exactness", SplitExactness);
  Report("descriptor_oracle_suite", DescriptorOracles);
  Report("gradient_suite", GradientSuite);
  Report("least_squares_equivalence", LeastSquaresEquivalence);
  Report("metric_oracles", MetricOracles);
  Report("shapley_exactness", ShapleyExactness);
  Report("determinism", [&] { return Determinism(work.path()); });
  Report("round_trips", [&] { return RoundTrips(work.path(), runs); });
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace fastqspr

int main() { return fastqspr::Main(); }
