// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DATASETIO_CHECKPOINT_H_
#define FASTQSPR_DATASETIO_CHECKPOINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fastqspr/neural/model.h"

namespace fastqspr::io {

inline constexpr int kCheckpointFormatVersion = 1;

// One trained repetition with the configuration that produced it.
struct CheckpointFile {
  nn::ModelCheckpoint model;
  std::vector<std::pair<std::string, std::string>> run_config;
  std::uint64_t seed = 0;
  int repetition = 0;

  bool operator==(const CheckpointFile&) const = default;
};

// `<dir>/checkpoint_<repetition>`.
std::filesystem::path CheckpointPath(const std::filesystem::path& dir, int repetition);

// Single file: a magic line with the format version, one line of JSON
// metadata (spec, scalers, manifests, config), then the weights as
// little-endian doubles, layer by layer, weights row-major then bias.
void SaveCheckpoint(const CheckpointFile& checkpoint, const std::filesystem::path& file);

// Throws IoError on format or catalogue version mismatch (both versions
// named), truncation, checksum failure or inconsistent shapes.
CheckpointFile LoadCheckpoint(const std::filesystem::path& file);

// checkpoint_<i> files in `dir`, ordered by i. Throws IoError if `dir` does
// not exist.
std::vector<std::filesystem::path> FindCheckpoints(const std::filesystem::path& dir);

}  // namespace fastqspr::io

#endif  // FASTQSPR_DATASETIO_CHECKPOINT_H_
