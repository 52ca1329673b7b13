// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_CLI_CONFIG_H_
#define FASTQSPR_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fastqspr::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string output_directory = "fastqspr_output";
  std::uint64_t random_seed = 42;
  std::string problem_type = "regression";
  std::string input_file;
  std::vector<std::string> target_columns;
  std::string smiles_column = "smiles";
  std::string descriptor_set = "all";
  bool clamp_input = false;
  int number_repeats = 1;
  int number_epochs = 100;
  int batch_size = 64;
  int patience = 15;
  double train_size = 0.8;
  double val_size = 0.1;
  double test_size = 0.1;
  std::string sampler = "random";
  // Keys beyond the original example file.
  int hidden_layers = 2;
  int hidden_width = 1800;
  double learning_rate = 1e-3;
  double clamp_bound = 3.0;
  bool standardize = true;

  bool operator==(const RunConfig&) const = default;
};

// Every recognized key, in snapshot order.
const std::vector<std::string>& ConfigKeys();

// Sets one key from its textual value. Throws ConfigError for unknown keys
// or values of the wrong type.
void ApplySetting(RunConfig& config, std::string_view key, std::string_view value);

// Flat `key: value` lines; `#` starts a comment outside quotes; values may
// be quoted. Unknown and repeated keys are errors (all unknown keys are
// listed). Required keys: input_file, target_columns.
RunConfig ParseConfig(std::string_view text, const std::vector<std::pair<std::string, std::string>>& overrides = {});
RunConfig LoadConfig(const std::filesystem::path& path,
                     const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Checks ranges and cross-field constraints.
void Validate(const RunConfig& config);

// Canonical key/value pairs covering every key, so the run can be replayed.
std::vector<std::pair<std::string, std::string>> ToPairs(const RunConfig& config);
std::string ToSnapshot(const RunConfig& config);

}  // namespace fastqspr::cli

#endif  // FASTQSPR_CLI_CONFIG_H_
