// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/datasetio/checkpoint.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "binary.h"
#include "fastqspr/datasetio/csv.h"
#include "fastqspr/descriptors/catalogue.h"
#include "json.hpp"

namespace fastqspr::io {
namespace {

using nlohmann::json;

constexpr std::string_view kMagic = "fastqspr-checkpoint";

json ScalerToJson(const prep::ScalerState& s) {
  return {{"kept_columns", s.kept_columns},
          {"means", s.means},
          {"stds", s.stds},
          {"clamp_bound", s.clamp_bound ? json(*s.clamp_bound) : json(nullptr)},
          {"target_flag", s.target_flag}};
}

prep::ScalerState ScalerFromJson(const json& j) {
  prep::ScalerState s;
  s.kept_columns = j.at("kept_columns").get<std::vector<std::string>>();
  s.means = j.at("means").get<std::vector<double>>();
  s.stds = j.at("stds").get<std::vector<double>>();
  if (!j.at("clamp_bound").is_null()) s.clamp_bound = j.at("clamp_bound").get<double>();
  s.target_flag = j.at("target_flag").get<bool>();
  if (s.means.size() != s.kept_columns.size() || s.stds.size() != s.kept_columns.size()) {
    throw IoError("scaler statistics do not match its column list");
  }
  return s;
}

std::string ReadAll(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint '" + file.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::filesystem::path CheckpointPath(const std::filesystem::path& dir, int repetition) {
  return dir / ("checkpoint_" + std::to_string(repetition));
}

void SaveCheckpoint(const CheckpointFile& c, const std::filesystem::path& file) {
  const auto& m = c.model;
  std::string payload;
  payload.reserve(m.params.Count() * 8);
  json shapes = json::array();
  for (const auto& layer : m.params.layers) {
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) internal::AppendDouble(payload, layer.weights.data()[i]);
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) internal::AppendDouble(payload, layer.bias[i]);
    shapes.push_back({layer.weights.rows(), layer.weights.cols()});
  }
  json config = json::array();
  for (const auto& [k, v] : c.run_config) config.push_back({k, v});
  const json header = {
      {"format_version", kCheckpointFormatVersion},
      {"catalogue_version", m.catalogue_version},
      {"descriptor_set", m.descriptor_set},
      {"descriptor_manifest", m.descriptor_manifest},
      {"target_names", m.target_names},
      {"spec",
       {{"input_dim", m.spec.input_dim},
        {"hidden_layers", m.spec.hidden_layers},
        {"hidden_width", m.spec.hidden_width},
        {"output_dim", m.spec.output_dim},
        {"task", std::string(nn::TaskName(m.spec.task))}}},
      {"feature_scaler", ScalerToJson(m.feature_scaler)},
      {"target_scaler", ScalerToJson(m.target_scaler)},
      {"run_config", config},
      {"seed", c.seed},
      {"repetition", c.repetition},
      {"payload",
       {{"layers", shapes}, {"bytes", payload.size()}, {"checksum", internal::Hex(internal::Fnv1a(payload))}}},
  };
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write checkpoint '" + file.string() + "'");
  out << kMagic << ' ' << kCheckpointFormatVersion << '\n' << header.dump() << '\n' << payload;
  if (!out) throw IoError("failed writing checkpoint '" + file.string() + "'");
}

CheckpointFile LoadCheckpoint(const std::filesystem::path& file) {
  const std::string data = ReadAll(file);
  const std::string where = "checkpoint '" + file.string() + "': ";
  const auto magic_end = data.find('\n');
  const std::string magic = data.substr(0, magic_end);
  if (magic_end == std::string::npos || !magic.starts_with(std::string(kMagic) + " ")) {
    throw IoError(where + "not a fastqspr checkpoint");
  }
  const std::string version = magic.substr(kMagic.size() + 1);
  if (version != std::to_string(kCheckpointFormatVersion)) {
    throw IoError(where + "format version " + version + " is not supported (expected " +
                  std::to_string(kCheckpointFormatVersion) + ")");
  }
  const auto header_end = data.find('\n', magic_end + 1);
  if (header_end == std::string::npos) throw IoError(where + "truncated header");

  CheckpointFile c;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> shapes;
  std::size_t bytes = 0;
  std::string checksum;
  try {
    const json h = json::parse(data.substr(magic_end + 1, header_end - magic_end - 1));
    auto& m = c.model;
    m.catalogue_version = h.at("catalogue_version").get<std::string>();
    if (m.catalogue_version != desc::kCatalogueVersion) {
      throw IoError("descriptor catalogue " + m.catalogue_version + " does not match this build's " +
                    std::string(desc::kCatalogueVersion));
    }
    m.descriptor_set = h.at("descriptor_set").get<std::string>();
    m.descriptor_manifest = h.at("descriptor_manifest").get<std::vector<std::string>>();
    m.target_names = h.at("target_names").get<std::vector<std::string>>();
    const auto& spec = h.at("spec");
    m.spec.input_dim = spec.at("input_dim").get<int>();
    m.spec.hidden_layers = spec.at("hidden_layers").get<int>();
    m.spec.hidden_width = spec.at("hidden_width").get<int>();
    m.spec.output_dim = spec.at("output_dim").get<int>();
    m.spec.task = nn::ParseTask(spec.at("task").get<std::string>());
    m.feature_scaler = ScalerFromJson(h.at("feature_scaler"));
    m.target_scaler = ScalerFromJson(h.at("target_scaler"));
    for (const auto& kv : h.at("run_config")) {
      c.run_config.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
    }
    c.seed = h.at("seed").get<std::uint64_t>();
    c.repetition = h.at("repetition").get<int>();
    for (const auto& s : h.at("payload").at("layers")) {
      shapes.emplace_back(s.at(0).get<Eigen::Index>(), s.at(1).get<Eigen::Index>());
    }
    bytes = h.at("payload").at("bytes").get<std::size_t>();
    checksum = h.at("payload").at("checksum").get<std::string>();
    m.spec.Validate();
  } catch (const IoError& e) {
    throw IoError(where + e.what());
  } catch (const std::exception& e) {
    throw IoError(where + "invalid metadata: " + e.what());
  }

  const std::string_view payload(data.data() + header_end + 1, data.size() - header_end - 1);
  if (payload.size() < bytes) {
    throw IoError(where + "truncated payload (" + std::to_string(payload.size()) + " of " + std::to_string(bytes) +
                  " bytes)");
  }
  if (payload.size() != bytes) throw IoError(where + "unexpected trailing bytes");
  if (internal::Hex(internal::Fnv1a(payload)) != checksum) throw IoError(where + "payload checksum mismatch");

  std::size_t offset = 0;
  auto& params = c.model.params;
  for (const auto& [rows, cols] : shapes) {
    nn::Layer layer{Matrix(rows, cols), nn::RowVector(cols)};
    if (offset + static_cast<std::size_t>(rows * cols + cols) * 8 > payload.size()) {
      throw IoError(where + "layer shapes exceed the payload");
    }
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i, offset += 8) {
      layer.weights.data()[i] = internal::ReadDouble(payload, offset);
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i, offset += 8) {
      layer.bias[i] = internal::ReadDouble(payload, offset);
    }
    params.layers.push_back(std::move(layer));
  }
  if (offset != payload.size()) throw IoError(where + "layer shapes do not cover the payload");
  if (params.Count() != c.model.spec.ParameterCount()) throw IoError(where + "weights do not match the network spec");
  if (static_cast<int>(c.model.feature_scaler.kept_columns.size()) != c.model.spec.input_dim) {
    throw IoError(where + "feature scaler width does not match the network input");
  }
  return c;
}

std::vector<std::filesystem::path> FindCheckpoints(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("checkpoint directory '" + dir.string() + "' not found");
  static const std::regex kName(R"(checkpoint_(\d+))");
  std::vector<std::pair<long, std::filesystem::path>> found;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch match;
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && std::regex_match(name, match, kName)) {
      found.emplace_back(std::stol(match[1]), entry.path());
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::filesystem::path> paths;
  for (auto& [i, p] : found) paths.push_back(std::move(p));
  return paths;
}

}  // namespace fastqspr::io
