// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DATASETIO_CACHE_H_
#define FASTQSPR_DATASETIO_CACHE_H_

#include <filesystem>
#include <span>
#include <string>

#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/descriptors/catalogue.h"
#include "fastqspr/molparse/graph.h"

namespace fastqspr::io {

// `<dir>/<stem>.fpcache` beside the input file.
std::filesystem::path CachePathFor(const std::filesystem::path& input);

struct CachedMatrix {
  LabeledMatrix matrix;
  bool hit = false;  // true when loaded without computing descriptors
};

// Whole-file cache keyed by a hash of the SMILES list and standardization
// flag, the descriptor-set name and the catalogue version. Any mismatch or
// unreadable file triggers a full recompute and rewrite; a corrupt file is
// reported as a warning, never an error.
CachedMatrix CachedDescriptors(std::span<const std::string> smiles, std::span<const mol::MolecularGraph> molecules,
                               const desc::DescriptorSet& set, const std::filesystem::path& cache_path,
                               bool standardize, std::size_t workers = 0);

}  // namespace fastqspr::io

#endif  // FASTQSPR_DATASETIO_CACHE_H_
