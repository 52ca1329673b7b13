// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/datasetio/cache.h"

#include <fstream>
#include <optional>
#include <sstream>

#include <spdlog/spdlog.h>

#include "binary.h"
#include "fastqspr/datasetio/csv.h"

namespace fastqspr::io {
namespace {

constexpr std::string_view kMagic = "fastqspr-descriptor-cache 1";

struct CacheHeader {
  std::string key;
  std::string set;
  std::string catalogue;
  long long rows = 0;
  long long cols = 0;
  std::string columns;
};

std::string CacheKey(std::span<const std::string> smiles, bool standardize) {
  std::uint64_t h = internal::Fnv1a(standardize ? "standardize=1\n" : "standardize=0\n");
  for (const auto& s : smiles) {
    h = internal::Fnv1a(s, h);
    h = internal::Fnv1a("\n", h);
  }
  return internal::Hex(h) + "-" + std::to_string(smiles.size());
}

std::string JoinColumns(const std::vector<std::string>& columns) {
  std::string out;
  for (const auto& c : columns) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string Serialize(const CacheHeader& h, const Matrix& values) {
  std::string payload;
  payload.reserve(static_cast<std::size_t>(values.size()) * 8);
  for (Eigen::Index i = 0; i < values.size(); ++i) internal::AppendDouble(payload, values.data()[i]);
  std::ostringstream out;
  out << kMagic << '\n'
      << "key " << h.key << '\n'
      << "set " << h.set << '\n'
      << "catalogue " << h.catalogue << '\n'
      << "rows " << h.rows << '\n'
      << "cols " << h.cols << '\n'
      << "columns " << h.columns << '\n'
      << "checksum " << internal::Hex(internal::Fnv1a(payload)) << '\n';
  return out.str() + payload;
}

// Returns the matrix when the file is intact and matches `expected`.
std::optional<Matrix> Load(const std::filesystem::path& path, const CacheHeader& expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string data = buffer.str();
  std::size_t pos = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    const auto end = data.find('\n', pos);
    if (end == std::string::npos) return std::nullopt;
    std::string line = data.substr(pos, end - pos);
    pos = end + 1;
    return line;
  };
  auto field = [&](std::string_view name) -> std::string {
    const auto line = next_line();
    const std::string prefix = std::string(name) + " ";
    if (!line || !line->starts_with(prefix)) throw IoError("malformed header line for '" + std::string(name) + "'");
    return line->substr(prefix.size());
  };
  try {
    if (next_line() != std::string(kMagic)) throw IoError("not a descriptor cache");
    CacheHeader h;
    h.key = field("key");
    h.set = field("set");
    h.catalogue = field("catalogue");
    h.rows = std::stoll(field("rows"));
    h.cols = std::stoll(field("cols"));
    h.columns = field("columns");
    const std::string checksum = field("checksum");
    if (h.key != expected.key || h.set != expected.set || h.catalogue != expected.catalogue ||
        h.rows != expected.rows || h.cols != expected.cols || h.columns != expected.columns) {
      spdlog::info("descriptor cache {} is stale; recomputing", path.string());
      return std::nullopt;
    }
    const std::string_view payload(data.data() + pos, data.size() - pos);
    if (payload.size() != static_cast<std::size_t>(h.rows * h.cols) * 8) throw IoError("payload size mismatch");
    if (internal::Hex(internal::Fnv1a(payload)) != checksum) throw IoError("checksum mismatch");
    Matrix m(h.rows, h.cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = internal::ReadDouble(payload, 8 * i);
    return m;
  } catch (const std::exception& e) {
    spdlog::warn("descriptor cache {} is corrupt ({}); recomputing", path.string(), e.what());
    return std::nullopt;
  }
}

}  // namespace

std::filesystem::path CachePathFor(const std::filesystem::path& input) {
  auto path = input;
  path.replace_extension(".fpcache");
  return path;
}

CachedMatrix CachedDescriptors(std::span<const std::string> smiles, std::span<const mol::MolecularGraph> molecules,
                               const desc::DescriptorSet& set, const std::filesystem::path& cache_path,
                               bool standardize, std::size_t workers) {
  if (smiles.size() != molecules.size()) throw IoError("SMILES and molecule counts differ");
  const CacheHeader expected{CacheKey(smiles, standardize),
                             set.name,
                             std::string(desc::kCatalogueVersion),
                             static_cast<long long>(molecules.size()),
                             static_cast<long long>(set.descriptors.size()),
                             JoinColumns(set.descriptors)};
  CachedMatrix result;
  result.matrix.columns = set.descriptors;
  if (auto cached = Load(cache_path, expected)) {
    spdlog::info("descriptor cache hit: {}", cache_path.string());
    result.matrix.values = std::move(*cached);
    result.hit = true;
    return result;
  }
  spdlog::info("computing {} descriptors for {} molecules", set.descriptors.size(), molecules.size());
  result.matrix = desc::ComputeMatrix(molecules, set, workers);
  std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
  if (out) out << Serialize(expected, result.matrix.values);
  if (!out) spdlog::warn("could not write descriptor cache {}", cache_path.string());
  return result;
}

}  // namespace fastqspr::io
