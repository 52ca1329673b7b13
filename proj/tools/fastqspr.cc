// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line entry point: train, predict, shap.

#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "fastqspr/cli/commands.h"
#include "fastqspr/cli/config.h"

namespace {

std::string FlagName(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return "--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fastqspr;
  CLI::App app{"fastqspr: descriptor-based neural property prediction for small molecules"};
  app.require_subcommand(1);
  bool verbose = false;
  bool quiet = false;
  std::size_t workers = 0;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Only warnings and errors");
  app.add_option("-j,--workers", workers, "Worker threads (0 = all cores)");

  auto* train = app.add_subcommand("train", "Train an ensemble from a configuration file");
  std::string config_path;
  train->add_option("config", config_path, "Configuration file (key: value lines)")->required();
  std::map<std::string, std::string> overrides;
  for (const auto& key : cli::ConfigKeys()) {
    train->add_option(FlagName(key), overrides[key], "Override '" + key + "'");
  }

  auto* predict = app.add_subcommand("predict", "Predict properties with trained checkpoints");
  cli::PredictOptions predict_options;
  predict->add_option("-c,--checkpoint-dir", predict_options.checkpoint_dir, "Directory with checkpoint_<i> files")
      ->required();
  predict->add_option("-i,--input", predict_options.input, "CSV with a SMILES column")->required();
  predict->add_option("-o,--output", predict_options.output, "Output CSV (default <checkpoint-dir>/predictions.csv)");
  predict->add_option("--smiles-column", predict_options.smiles_column, "SMILES column (default: as trained)");

  auto* shap = app.add_subcommand("shap", "Shapley attributions of descriptors");
  cli::ShapOptions shap_options;
  shap->add_option("-c,--checkpoint-dir", shap_options.checkpoint_dir, "Directory with checkpoint_<i> files")
      ->required();
  shap->add_option("-i,--input", shap_options.input, "CSV with a SMILES column")->required();
  shap->add_option("-o,--output-dir", shap_options.output_dir, "Output directory (default <checkpoint-dir>)");
  shap->add_option("--smiles-column", shap_options.smiles_column, "SMILES column (default: as trained)");
  shap->add_option("-p,--permutations", shap_options.permutations, "Sampled permutations per molecule")
      ->capture_default_str();
  shap->add_option("--seed", shap_options.seed, "Sampling seed")->capture_default_str();
  shap->add_option("--target", shap_options.target, "Target to explain (default: first)");

  CLI11_PARSE(app, argc, argv);

  auto logger = spdlog::stderr_color_mt("fastqspr");
  logger->set_pattern("[%H:%M:%S.%e] [%^%l%$] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(verbose ? spdlog::level::debug : quiet ? spdlog::level::warn : spdlog::level::info);

  try {
    if (*train) {
      std::vector<std::pair<std::string, std::string>> given;
      for (const auto& key : cli::ConfigKeys()) {
        if (train->count(FlagName(key)) > 0) given.emplace_back(key, overrides[key]);
      }
      const auto config = cli::LoadConfig(config_path, given);
      const auto summary = cli::RunTrain(config, workers);
      std::printf("trained %d repetitions; reports in %s\n", summary.report.repetitions(),
                  config.output_directory.c_str());
    } else if (*predict) {
      predict_options.workers = workers;
      const auto summary = cli::RunPredict(predict_options);
      std::printf("wrote %d predictions to %s\n", summary.rows, summary.output.string().c_str());
    } else if (*shap) {
      shap_options.workers = workers;
      const auto summary = cli::RunShap(shap_options);
      std::printf("explained %zu molecules; top descriptor %s\n", summary.rows.size(),
                  summary.importance.front().descriptor.c_str());
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
