// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/datasetio/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "fastqspr/common/missing.h"
#include "fastqspr/molparse/smiles.h"
#include "fastqspr/molparse/standardize.h"

namespace fastqspr::io {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

// Empty cells and common NA spellings are missing; anything else must be a
// complete finite number.
std::optional<double> ParseTarget(const std::string& raw, bool& ok) {
  ok = true;
  const std::string cell = Trim(raw);
  if (cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" || cell == "N/A") return std::nullopt;
  double value = 0.0;
  const char* begin = cell.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    ok = false;
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> IdentifierColumn(const CsvTable& table, std::size_t smiles_index,
                                            const std::vector<std::size_t>& target_indices) {
  if (table.header.empty() || smiles_index == 0) return std::nullopt;
  if (std::find(target_indices.begin(), target_indices.end(), 0u) != target_indices.end()) return std::nullopt;
  return 0;
}

mol::MolecularGraph ParseMolecule(const std::string& smiles, bool standardize) {
  auto graph = mol::ParseSmiles(smiles);
  return standardize ? mol::Standardize(graph) : graph;
}

}  // namespace

LoadResult LoadDataset(const CsvTable& table, const LoadOptions& options) {
  if (options.target_columns.empty()) throw IoError("at least one target column is required");
  const std::size_t smiles_index = table.ColumnIndex(options.smiles_column);
  std::vector<std::size_t> target_indices;
  for (const auto& name : options.target_columns) target_indices.push_back(table.ColumnIndex(name));
  const auto id_index = IdentifierColumn(table, smiles_index, target_indices);

  LoadResult result;
  result.report.input_rows = static_cast<int>(table.rows.size());
  Dataset& ds = result.dataset;
  std::vector<std::vector<double>> targets;
  const bool single_task = target_indices.size() == 1;

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const int row_number = static_cast<int>(r) + 1;
    const auto& row = table.rows[r];
    auto drop = [&](std::string reason) { result.report.dropped.push_back({row_number, std::move(reason)}); };
    if (row.size() != table.header.size()) {
      drop("expected " + std::to_string(table.header.size()) + " fields, found " + std::to_string(row.size()));
      continue;
    }
    std::vector<double> values;
    bool bad_target = false;
    int observed = 0;
    for (std::size_t k = 0; k < target_indices.size(); ++k) {
      bool ok = true;
      const auto v = ParseTarget(row[target_indices[k]], ok);
      if (!ok) {
        drop("target '" + options.target_columns[k] + "' is not a number: '" + row[target_indices[k]] + "'");
        bad_target = true;
        break;
      }
      values.push_back(v.value_or(kMissing));
      observed += v.has_value();
    }
    if (bad_target) continue;
    if (observed == 0) {
      drop(single_task ? "target is missing" : "all targets are missing");
      continue;
    }
    const std::string smiles = Trim(row[smiles_index]);
    try {
      ds.molecules.push_back(ParseMolecule(smiles, options.standardize));
    } catch (const std::exception& e) {
      drop("invalid SMILES '" + smiles + "': " + e.what());
      continue;
    }
    ds.smiles.push_back(smiles);
    if (id_index) ds.identifiers.push_back(row[*id_index]);
    ds.source_rows.push_back(row_number);
    targets.push_back(std::move(values));
  }

  for (const auto& d : result.report.dropped) spdlog::warn("dropping row {}: {}", d.row, d.reason);
  if (ds.size() == 0) throw IoError("no valid rows remain after cleaning");

  std::unordered_map<std::string, int> first_seen;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto [it, inserted] = first_seen.emplace(ds.smiles[i], ds.source_rows[i]);
    if (!inserted) spdlog::warn("row {} repeats the SMILES of row {}; both are kept", ds.source_rows[i], it->second);
  }

  ds.targets.columns = options.target_columns;
  ds.targets.values.resize(static_cast<Eigen::Index>(ds.size()), static_cast<Eigen::Index>(target_indices.size()));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t k = 0; k < targets[i].size(); ++k) ds.targets.values(i, k) = targets[i][k];
  }
  return result;
}

LoadResult LoadDataset(const std::filesystem::path& path, const LoadOptions& options) {
  return LoadDataset(ReadCsv(path), options);
}

MoleculeRows LoadMolecules(const CsvTable& table, const std::string& smiles_column, bool standardize) {
  const std::size_t smiles_index = table.ColumnIndex(smiles_column);
  const auto id_index = IdentifierColumn(table, smiles_index, {});
  MoleculeRows out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string smiles = smiles_index < row.size() ? Trim(row[smiles_index]) : std::string();
    out.smiles.push_back(smiles);
    out.identifiers.push_back(id_index && *id_index < row.size() ? row[*id_index] : std::string());
    try {
      if (row.size() != table.header.size()) throw IoError("wrong field count");
      out.molecules.push_back(ParseMolecule(smiles, standardize));
      out.errors.emplace_back();
    } catch (const std::exception& e) {
      out.molecules.push_back(std::nullopt);
      out.errors.push_back(e.what());
      spdlog::warn("row {}: cannot parse SMILES '{}': {}", r + 1, smiles, e.what());
    }
  }
  if (!id_index) out.identifiers.clear();
  return out;
}

}  // namespace fastqspr::io
