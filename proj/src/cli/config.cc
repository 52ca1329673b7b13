// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/cli/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "fastqspr/descriptors/catalogue.h"
#include "fastqspr/neural/network.h"

namespace fastqspr::cli {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw ConfigError(fmt::format("{}: '{}' is not a valid number", key, value));
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  static const std::set<std::string_view> kTrue = {"True", "true", "TRUE", "yes", "Yes", "1", "on"};
  static const std::set<std::string_view> kFalse = {"False", "false", "FALSE", "no", "No", "0", "off"};
  if (kTrue.contains(value)) return true;
  if (kFalse.contains(value)) return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, value));
}

std::vector<std::string> ParseList(std::string_view value) {
  std::vector<std::string> out;
  std::string current;
  for (char c : value) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string FormatReal(double v) { return fmt::format("{}", v); }

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;
using Getter = std::function<std::string(const RunConfig&)>;

struct Field {
  std::string key;
  Setter set;
  Getter get;
};

template <typename M>
Field StringField(std::string key, M member) {
  return {key, [member](RunConfig& c, std::string_view, std::string_view v) { c.*member = std::string(v); },
          [member](const RunConfig& c) { return c.*member; }};
}
template <typename T, typename M>
Field NumberField(std::string key, M member) {
  return {key, [member](RunConfig& c, std::string_view k, std::string_view v) { c.*member = ParseNumber<T>(k, v); },
          [member](const RunConfig& c) { return fmt::format("{}", c.*member); }};
}
template <typename M>
Field RealField(std::string key, M member) {
  return {key,
          [member](RunConfig& c, std::string_view k, std::string_view v) { c.*member = ParseNumber<double>(k, v); },
          [member](const RunConfig& c) { return FormatReal(c.*member); }};
}
template <typename M>
Field BoolField(std::string key, M member) {
  return {key, [member](RunConfig& c, std::string_view k, std::string_view v) { c.*member = ParseBool(k, v); },
          [member](const RunConfig& c) { return std::string(c.*member ? "True" : "False"); }};
}

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      StringField("output_directory", &RunConfig::output_directory),
      NumberField<std::uint64_t>("random_seed", &RunConfig::random_seed),
      StringField("problem_type", &RunConfig::problem_type),
      StringField("input_file", &RunConfig::input_file),
      {"target_columns", [](RunConfig& c, std::string_view, std::string_view v) { c.target_columns = ParseList(v); },
       [](const RunConfig& c) {
         std::string out;
         for (const auto& t : c.target_columns) out += (out.empty() ? "" : " ") + t;
         return out;
       }},
      StringField("smiles_column", &RunConfig::smiles_column),
      StringField("descriptor_set", &RunConfig::descriptor_set),
      BoolField("clamp_input", &RunConfig::clamp_input),
      NumberField<int>("number_repeats", &RunConfig::number_repeats),
      NumberField<int>("number_epochs", &RunConfig::number_epochs),
      NumberField<int>("batch_size", &RunConfig::batch_size),
      NumberField<int>("patience", &RunConfig::patience),
      RealField("train_size", &RunConfig::train_size),
      RealField("val_size", &RunConfig::val_size),
      RealField("test_size", &RunConfig::test_size),
      StringField("sampler", &RunConfig::sampler),
      NumberField<int>("hidden_layers", &RunConfig::hidden_layers),
      NumberField<int>("hidden_width", &RunConfig::hidden_width),
      RealField("learning_rate", &RunConfig::learning_rate),
      RealField("clamp_bound", &RunConfig::clamp_bound),
      BoolField("standardize", &RunConfig::standardize),
  };
  return fields;
}

const Field* FindField(std::string_view key) {
  for (const auto& f : Fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

std::string Unquote(std::string value) {
  if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
    return value.substr(1, value.size() - 2);
  }
  return value;
}

// Removes a trailing comment that starts outside quotes.
std::string StripComment(const std::string& line) {
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const auto keys = [] {
    std::vector<std::string> k;
    for (const auto& f : Fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

void ApplySetting(RunConfig& config, std::string_view key, std::string_view value) {
  const Field* field = FindField(key);
  if (field == nullptr) throw ConfigError(fmt::format("unknown configuration key '{}'", key));
  field->set(config, key, value);
}

RunConfig ParseConfig(std::string_view text, const std::vector<std::pair<std::string, std::string>>& overrides) {
  RunConfig config;
  std::set<std::string> seen;
  std::vector<std::string> unknown;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = Trim(StripComment(raw));
    if (line.empty()) continue;
    if (raw.find_first_not_of(" \t") != 0) {
      throw ConfigError(fmt::format("line {}: nested or indented entries are not supported", line_number));
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ConfigError(fmt::format("line {}: expected 'key: value'", line_number));
    const std::string key = Trim(line.substr(0, colon));
    const std::string value = Unquote(Trim(line.substr(colon + 1)));
    if (FindField(key) == nullptr) {
      unknown.push_back(key);
      continue;
    }
    if (!seen.insert(key).second) throw ConfigError(fmt::format("line {}: key '{}' appears twice", line_number, key));
    try {
      ApplySetting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("line {}: {}", line_number, e.what()));
    }
  }
  if (!unknown.empty()) {
    std::string list;
    for (const auto& k : unknown) list += (list.empty() ? "" : ", ") + k;
    throw ConfigError("unknown configuration key(s): " + list);
  }
  for (const auto& [key, value] : overrides) {
    ApplySetting(config, key, value);
    seen.insert(key);
  }
  for (const char* required : {"input_file", "target_columns"}) {
    if (!seen.contains(required)) throw ConfigError(fmt::format("required key '{}' is missing", required));
  }
  Validate(config);
  return config;
}

RunConfig LoadConfig(const std::filesystem::path& path,
                     const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return ParseConfig(text.str(), overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void Validate(const RunConfig& c) {
  try {
    nn::ParseTask(c.problem_type);
  } catch (const std::exception&) {
    throw ConfigError("problem_type must be 'regression' or 'multilabel', got '" + c.problem_type + "'");
  }
  try {
    desc::GetDescriptorSet(c.descriptor_set);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (c.sampler != "random") throw ConfigError("sampler '" + c.sampler + "' is not supported (only 'random')");
  if (c.input_file.empty()) throw ConfigError("input_file must not be empty");
  if (c.target_columns.empty()) throw ConfigError("target_columns must name at least one column");
  if (c.output_directory.empty()) throw ConfigError("output_directory must not be empty");
  if (std::abs(c.train_size + c.val_size + c.test_size - 1.0) > 1e-9) {
    throw ConfigError(fmt::format("train_size + val_size + test_size must equal 1 (got {})",
                                  c.train_size + c.val_size + c.test_size));
  }
  if (c.train_size <= 0 || c.val_size <= 0 || c.test_size <= 0) throw ConfigError("split sizes must be positive");
  if (c.number_repeats < 1) throw ConfigError("number_repeats must be at least 1");
  if (c.number_epochs < 1) throw ConfigError("number_epochs must be at least 1");
  if (c.batch_size < 1) throw ConfigError("batch_size must be at least 1");
  if (c.patience < 1 || c.patience > c.number_epochs) throw ConfigError("patience must lie in [1, number_epochs]");
  if (c.hidden_layers < 0) throw ConfigError("hidden_layers must be non-negative");
  if (c.hidden_layers > 0 && c.hidden_width < 1) throw ConfigError("hidden_width must be at least 1");
  if (!(c.learning_rate > 0)) throw ConfigError("learning_rate must be positive");
  if (!(c.clamp_bound > 0)) throw ConfigError("clamp_bound must be positive");
}

std::vector<std::pair<std::string, std::string>> ToPairs(const RunConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : Fields()) out.emplace_back(f.key, f.get(config));
  return out;
}

std::string ToSnapshot(const RunConfig& config) {
  std::string out = "# resolved configuration; replay with `fastqspr train config_snapshot`\n";
  for (const auto& [k, v] : ToPairs(config)) {
    const bool quote = v.empty() || v.find_first_of("#:'\"") != std::string::npos || v != Trim(v);
    out += k + ": " + (quote ? "\"" + v + "\"" : v) + "\n";
  }
  return out;
}

}  // namespace fastqspr::cli
