// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DATASETIO_DATASET_H_
#define FASTQSPR_DATASETIO_DATASET_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/datasetio/csv.h"
#include "fastqspr/molparse/graph.h"

namespace fastqspr::io {

struct DroppedRow {
  int row = 0;  // 1-based data row (the header is not counted)
  std::string reason;
};

struct DropReport {
  int input_rows = 0;
  std::vector<DroppedRow> dropped;
};

// Surviving rows only. Identifiers come from the first CSV column when it
// is neither the SMILES column nor a target; otherwise they are empty.
struct Dataset {
  std::vector<std::string> identifiers;
  std::vector<std::string> smiles;
  std::vector<mol::MolecularGraph> molecules;
  LabeledMatrix targets;  // missing cells hold kMissing
  std::vector<int> source_rows;

  std::size_t size() const { return smiles.size(); }
};

struct LoadOptions {
  std::string smiles_column = "smiles";
  std::vector<std::string> target_columns;
  bool standardize = true;  // keep the largest fragment
};

struct LoadResult {
  Dataset dataset;
  DropReport report;
};

// Drops rows whose SMILES fails to parse, whose targets are all missing
// (any missing target for a single-task file) or unparseable. Throws
// IoError for a missing column or when no row survives. Duplicate SMILES
// are kept with a warning.
LoadResult LoadDataset(const CsvTable& table, const LoadOptions& options);
LoadResult LoadDataset(const std::filesystem::path& path, const LoadOptions& options);

// Prediction input: every row is kept; rows whose SMILES fails to parse
// have no molecule and an error message.
struct MoleculeRows {
  std::vector<std::string> identifiers;
  std::vector<std::string> smiles;
  std::vector<std::optional<mol::MolecularGraph>> molecules;
  std::vector<std::string> errors;
};

MoleculeRows LoadMolecules(const CsvTable& table, const std::string& smiles_column, bool standardize);

}  // namespace fastqspr::io

#endif  // FASTQSPR_DATASETIO_DATASET_H_
