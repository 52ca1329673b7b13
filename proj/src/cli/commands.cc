// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "fastqspr/common/missing.h"
#include "fastqspr/datasetio/cache.h"
#include "fastqspr/datasetio/checkpoint.h"
#include "fastqspr/datasetio/csv.h"
#include "fastqspr/descriptors/catalogue.h"
#include "fastqspr/neural/model.h"
#include "fastqspr/neural/trainer.h"
#include "fastqspr/preprocess/scaler.h"

namespace fastqspr::cli {
namespace fs = std::filesystem;
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io::IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw io::IoError("failed writing '" + path.string() + "'");
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

void CheckBinaryLabels(const LabeledMatrix& targets) {
  for (Eigen::Index r = 0; r < targets.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < targets.values.cols(); ++c) {
      const double v = targets.values(r, c);
      if (!IsMissing(v) && v != 0.0 && v != 1.0) {
        throw ConfigError(fmt::format("multilabel target '{}' holds {}; labels must be 0 or 1",
                                      targets.columns[static_cast<std::size_t>(c)], v));
      }
    }
  }
}

// Drops stale checkpoints so later commands do not mix runs.
void RemoveCheckpoints(const fs::path& dir) {
  for (const auto& path : io::FindCheckpoints(dir)) {
    spdlog::info("removing previous {}", path.string());
    fs::remove(path);
  }
}

std::string ReportCsv(const metrics::MetricReport& report) {
  std::vector<std::string> header = {"repetition"};
  for (const auto& name : report.names()) header.push_back(name);
  std::string out = io::CsvLine(header) + "\n";
  for (int i = 0; i < report.repetitions(); ++i) {
    std::vector<std::string> row = {std::to_string(i)};
    for (const auto& name : report.names()) {
      row.push_back(io::FormatDouble(ReportedValue(name, report.values(name)[i])));
    }
    out += io::CsvLine(row) + "\n";
  }
  for (const char* label : {"mean", "std"}) {
    std::vector<std::string> row = {label};
    for (const auto& name : report.names()) {
      const auto s = report.Summary(name);
      row.push_back(io::FormatDouble(ReportedValue(name, label == std::string("mean") ? s.mean : s.std)));
    }
    out += io::CsvLine(row) + "\n";
  }
  return out;
}

std::string ReportText(const RunConfig& config, const TrainSummary& summary) {
  const auto& report = summary.report;
  std::string out;
  out += fmt::format("problem_type: {}\n", config.problem_type);
  out += fmt::format("targets: {}\n", Join(config.target_columns, " "));
  out += fmt::format("descriptor_set: {}\n", config.descriptor_set);
  out += fmt::format("molecules: {} ({} rows dropped)\n", summary.rows, summary.drops.dropped.size());
  out += fmt::format("repetitions: {}\n", report.repetitions());
  out += "metrics on the held-out test split (mape and wmape in percent)\n\n";
  out += fmt::format("{:<12}", "repetition");
  for (const auto& name : report.names()) out += fmt::format(" {:>24}", name);
  out += fmt::format(" {:>10}\n", "best_epoch");
  for (int i = 0; i < report.repetitions(); ++i) {
    out += fmt::format("{:<12}", i);
    for (const auto& name : report.names()) {
      out += fmt::format(" {:>24}", io::FormatDouble(ReportedValue(name, report.values(name)[i])));
    }
    out += fmt::format(" {:>10}\n", summary.best_epochs[static_cast<std::size_t>(i)]);
  }
  out += "\nsummary (mean +/- sample standard deviation)\n";
  for (const auto& name : report.names()) {
    const auto s = report.Summary(name);
    out += fmt::format("{:<12} {} +/- {}\n", name, io::FormatDouble(ReportedValue(name, s.mean)),
                       io::FormatDouble(ReportedValue(name, s.std)));
  }
  return out;
}

struct LoadedEnsemble {
  std::vector<io::CheckpointFile> files;
  std::string smiles_column = "smiles";
  bool standardize = true;
};

LoadedEnsemble LoadEnsemble(const fs::path& dir) {
  const auto paths = io::FindCheckpoints(dir);
  if (paths.empty()) throw io::IoError("no checkpoint_<i> files in '" + dir.string() + "'");
  LoadedEnsemble out;
  for (const auto& p : paths) out.files.push_back(io::LoadCheckpoint(p));
  const auto& first = out.files.front().model;
  for (const auto& f : out.files) {
    if (f.model.descriptor_set != first.descriptor_set || f.model.descriptor_manifest != first.descriptor_manifest ||
        f.model.target_names != first.target_names || f.model.spec.task != first.spec.task) {
      throw io::IoError("checkpoints in '" + dir.string() + "' come from different runs");
    }
  }
  for (const auto& [k, v] : out.files.front().run_config) {
    if (k == "smiles_column") out.smiles_column = v;
    if (k == "standardize") {
      RunConfig scratch;
      ApplySetting(scratch, k, v);
      out.standardize = scratch.standardize;
    }
  }
  return out;
}

struct Featurized {
  io::MoleculeRows rows;
  std::vector<int> valid;  // indices into rows
  LabeledMatrix features;  // valid rows only
};

Featurized Featurize(const fs::path& input, const std::string& smiles_column, bool standardize,
                     const std::string& descriptor_set, std::size_t workers) {
  Featurized out;
  out.rows = io::LoadMolecules(io::ReadCsv(input), smiles_column, standardize);
  std::vector<mol::MolecularGraph> molecules;
  for (std::size_t i = 0; i < out.rows.molecules.size(); ++i) {
    if (out.rows.molecules[i]) {
      out.valid.push_back(static_cast<int>(i));
      molecules.push_back(*out.rows.molecules[i]);
    }
  }
  out.features = desc::ComputeMatrix(molecules, desc::GetDescriptorSet(descriptor_set), workers);
  return out;
}

}  // namespace

double ReportedValue(const std::string& metric, double value) {
  return (metric == "mape" || metric == "wmape") ? 100.0 * value : value;
}

TrainSummary RunTrain(const RunConfig& config, std::size_t workers) {
  Validate(config);
  const nn::Task task = nn::ParseTask(config.problem_type);
  const fs::path out_dir = config.output_directory;
  fs::create_directories(out_dir);
  WriteFile(out_dir / "config_snapshot", ToSnapshot(config));

  TrainSummary summary;
  auto start = Clock::now();
  auto loaded = io::LoadDataset(fs::path(config.input_file),
                                {config.smiles_column, config.target_columns, config.standardize});
  const io::Dataset& data = loaded.dataset;
  summary.drops = loaded.report;
  summary.rows = static_cast<int>(data.size());
  if (task == nn::Task::kMultilabelClassification) CheckBinaryLabels(data.targets);
  {
    std::string dropped = io::CsvLine({"row", "reason"}) + "\n";
    for (const auto& d : loaded.report.dropped) dropped += io::CsvLine({std::to_string(d.row), d.reason}) + "\n";
    WriteFile(out_dir / "dropped_rows.csv", dropped);
  }

  const auto set = desc::GetDescriptorSet(config.descriptor_set);
  const auto cached = io::CachedDescriptors(data.smiles, data.molecules, set, io::CachePathFor(config.input_file),
                                            config.standardize, workers);
  summary.cache_hit = cached.hit;
  const LabeledMatrix& raw = cached.matrix;
  spdlog::info("featurized {} molecules x {} descriptors in {:.2f} s (cache {})", data.size(), raw.columns.size(),
               Seconds(start), cached.hit ? "hit" : "miss");

  RemoveCheckpoints(out_dir);
  const auto snapshot = ToPairs(config);
  const std::optional<double> clamp =
      config.clamp_input ? std::optional<double>(config.clamp_bound) : std::nullopt;
  for (int rep = 0; rep < config.number_repeats; ++rep) {
    start = Clock::now();
    const std::uint64_t seed = config.random_seed + static_cast<std::uint64_t>(rep);
    const auto split = io::RandomSplit(static_cast<int>(data.size()),
                                       {config.train_size, config.val_size, config.test_size}, seed);
    const auto train_raw = SelectRows(raw, split.train);
    const auto train_targets = SelectRows(data.targets, split.train);

    nn::ModelCheckpoint model;
    model.feature_scaler = prep::FitFeatures(train_raw, clamp);
    model.target_scaler = task == nn::Task::kRegression ? prep::FitTargets(train_targets)
                                                         : prep::IdentityScaler(data.targets.columns, true);
    model.descriptor_set = set.name;
    model.catalogue_version = std::string(desc::kCatalogueVersion);
    model.descriptor_manifest = raw.columns;
    model.target_names = data.targets.columns;
    model.spec = {static_cast<int>(model.feature_scaler.kept_columns.size()), config.hidden_layers,
                  config.hidden_width, static_cast<int>(data.targets.columns.size()), task};

    auto scaled = [&](const std::vector<int>& rows, bool targets) {
      return targets ? prep::Transform(model.target_scaler, SelectRows(data.targets, rows)).values
                     : prep::Transform(model.feature_scaler, SelectRows(raw, rows)).values;
    };
    const nn::TrainConfig train_config{config.number_epochs, config.batch_size, config.patience,
                                       config.learning_rate, seed};
    auto result = nn::TrainModel(model.spec, train_config, scaled(split.train, false), scaled(split.train, true),
                                 scaled(split.val, false), scaled(split.val, true));
    model.params = std::move(result.params);

    const Matrix test_pred = nn::PredictStandardized(model, scaled(split.test, false));
    const Matrix test_truth = SelectRows(data.targets, split.test).values;
    const auto values = task == nn::Task::kRegression ? metrics::EvaluateRegression(test_pred, test_truth)
                                                      : metrics::EvaluateClassification(test_pred, test_truth);
    summary.report.Add(values);

    const auto path = io::CheckpointPath(out_dir, rep);
    io::SaveCheckpoint({model, snapshot, seed, rep}, path);
    summary.checkpoints.push_back(path);
    summary.splits.push_back(split);
    summary.best_epochs.push_back(result.best_epoch);
    spdlog::info("repetition {}: {} epochs (best {}{}) in {:.2f} s, test {} = {:.4f}", rep, result.log.size(),
                 result.best_epoch, result.stopped_early ? ", stopped early" : "", Seconds(start),
                 values.front().first, values.front().second);
  }

  WriteFile(out_dir / "report.csv", ReportCsv(summary.report));
  WriteFile(out_dir / "report.txt", ReportText(config, summary));
  return summary;
}

PredictSummary RunPredict(const PredictOptions& options) {
  const auto ensemble = LoadEnsemble(options.checkpoint_dir);
  const auto& first = ensemble.files.front().model;
  const std::string smiles_column = options.smiles_column.empty() ? ensemble.smiles_column : options.smiles_column;
  const auto start = Clock::now();
  auto data = Featurize(options.input, smiles_column, ensemble.standardize, first.descriptor_set, options.workers);

  PredictSummary summary;
  summary.output = options.output.empty() ? options.checkpoint_dir / "predictions.csv" : options.output;
  summary.rows = static_cast<int>(data.rows.smiles.size());
  summary.invalid_rows = summary.rows - static_cast<int>(data.valid.size());
  summary.checkpoints = static_cast<int>(ensemble.files.size());
  const auto n_targets = static_cast<Eigen::Index>(first.target_names.size());
  summary.ensemble = Matrix::Constant(summary.rows, n_targets, kMissing);

  if (!data.valid.empty()) {
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(data.valid.size()), n_targets);
    for (const auto& file : ensemble.files) {
      Matrix full = Matrix::Constant(summary.rows, n_targets, kMissing);
      const Matrix pred = nn::Predict(file.model, data.features);
      for (std::size_t i = 0; i < data.valid.size(); ++i) {
        full.row(data.valid[i]) = pred.row(static_cast<Eigen::Index>(i));
      }
      sum += pred;
      summary.per_checkpoint.push_back(std::move(full));
    }
    sum /= static_cast<double>(ensemble.files.size());
    for (std::size_t i = 0; i < data.valid.size(); ++i) {
      summary.ensemble.row(data.valid[i]) = sum.row(static_cast<Eigen::Index>(i));
    }
  } else {
    for (std::size_t k = 0; k < ensemble.files.size(); ++k) summary.per_checkpoint.push_back(summary.ensemble);
  }
  if (summary.invalid_rows > 0) {
    spdlog::warn("{} of {} rows have invalid SMILES; their predictions are left empty", summary.invalid_rows,
                 summary.rows);
  }

  const bool has_id = !data.rows.identifiers.empty();
  const auto table_header = io::ReadCsv(options.input).header;
  std::vector<std::string> header;
  if (has_id) header.push_back(table_header.front());
  header.push_back(smiles_column);
  header.push_back("status");
  for (const auto& t : first.target_names) {
    header.push_back(t);
    for (const auto& file : ensemble.files) header.push_back(fmt::format("{}_checkpoint_{}", t, file.repetition));
  }
  std::string out = io::CsvLine(header) + "\n";
  for (int r = 0; r < summary.rows; ++r) {
    std::vector<std::string> row;
    if (has_id) row.push_back(data.rows.identifiers[static_cast<std::size_t>(r)]);
    row.push_back(data.rows.smiles[static_cast<std::size_t>(r)]);
    const auto& error = data.rows.errors[static_cast<std::size_t>(r)];
    row.push_back(error.empty() ? "ok" : "invalid SMILES: " + error);
    for (Eigen::Index t = 0; t < n_targets; ++t) {
      row.push_back(io::FormatDouble(summary.ensemble(r, t)));
      for (const auto& m : summary.per_checkpoint) row.push_back(io::FormatDouble(m(r, t)));
    }
    out += io::CsvLine(row) + "\n";
  }
  if (summary.output.has_parent_path()) fs::create_directories(summary.output.parent_path());
  WriteFile(summary.output, out);
  spdlog::info("predicted {} rows with {} checkpoints in {:.2f} s -> {}", summary.rows, summary.checkpoints,
               Seconds(start), summary.output.string());
  return summary;
}

ShapSummary RunShap(const ShapOptions& options) {
  if (options.permutations < 1) throw ConfigError("permutations must be at least 1");
  const auto ensemble = LoadEnsemble(options.checkpoint_dir);
  const auto& first = ensemble.files.front().model;
  int target = 0;
  if (!options.target.empty()) {
    const auto it = std::find(first.target_names.begin(), first.target_names.end(), options.target);
    if (it == first.target_names.end()) {
      throw ConfigError("unknown target '" + options.target + "' (model targets: " + Join(first.target_names, ", ") +
                        ")");
    }
    target = static_cast<int>(it - first.target_names.begin());
  }
  const std::string smiles_column = options.smiles_column.empty() ? ensemble.smiles_column : options.smiles_column;
  const auto start = Clock::now();
  auto data = Featurize(options.input, smiles_column, ensemble.standardize, first.descriptor_set, options.workers);

  ShapSummary summary;
  summary.checkpoints = static_cast<int>(ensemble.files.size());
  summary.skipped_rows = static_cast<int>(data.rows.smiles.size() - data.valid.size());
  if (summary.skipped_rows > 0) spdlog::warn("skipping {} rows with invalid SMILES", summary.skipped_rows);
  if (data.valid.empty()) throw io::IoError("no valid molecules to explain in '" + options.input.string() + "'");
  for (int i : data.valid) summary.smiles.push_back(data.rows.smiles[static_cast<std::size_t>(i)]);

  spdlog::info("explaining {} molecules with {} checkpoints, {} permutations each", data.valid.size(),
               summary.checkpoints, options.permutations);
  std::vector<std::vector<attr::AttributionResult>> runs;
  for (const auto& file : ensemble.files) {
    attr::ShapleyOptions shap{options.permutations, options.seed, target};
    runs.push_back(attr::AttributeRows(file.model, data.features, shap, options.workers));
  }
  summary.rows = attr::AverageAttributions(runs);
  summary.importance = attr::DatasetImportance(summary.rows);

  const fs::path out_dir = options.output_dir.empty() ? options.checkpoint_dir : options.output_dir;
  fs::create_directories(out_dir);
  std::string importance = io::CsvLine({"rank", "descriptor", "mean_abs_attribution"}) + "\n";
  for (std::size_t i = 0; i < summary.importance.size(); ++i) {
    importance += io::CsvLine({std::to_string(i + 1), summary.importance[i].descriptor,
                               io::FormatDouble(summary.importance[i].mean_abs_attribution)}) + "\n";
  }
  WriteFile(out_dir / "importance.csv", importance);

  const bool has_id = !data.rows.identifiers.empty();
  std::vector<std::string> header;
  if (has_id) header.push_back("identifier");
  for (const char* h : {"smiles", "base_value", "explained_output"}) header.push_back(h);
  for (const auto& f : summary.rows.front().features) header.push_back(f);
  std::string attributions = io::CsvLine(header) + "\n";
  for (std::size_t i = 0; i < summary.rows.size(); ++i) {
    const auto& r = summary.rows[i];
    std::vector<std::string> row;
    if (has_id) row.push_back(data.rows.identifiers[static_cast<std::size_t>(data.valid[i])]);
    row.push_back(summary.smiles[i]);
    row.push_back(io::FormatDouble(r.base_value));
    row.push_back(io::FormatDouble(r.explained_output));
    for (double v : r.values) row.push_back(io::FormatDouble(v));
    attributions += io::CsvLine(row) + "\n";
  }
  WriteFile(out_dir / "attributions.csv", attributions);
  spdlog::info("attributions written to {} in {:.2f} s", out_dir.string(), Seconds(start));
  return summary;
}

}  // namespace fastqspr::cli
