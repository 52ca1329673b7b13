// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DESCRIPTORS_CATALOGUE_H_
#define FASTQSPR_DESCRIPTORS_CATALOGUE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fastqspr/common/labeled_matrix.h"
#include "fastqspr/molparse/graph.h"

namespace fastqspr::desc {

// Bumped whenever a descriptor is added, removed, reordered or redefined.
// Checkpoints and descriptor caches record it and refuse to mix versions.
inline constexpr std::string_view kCatalogueVersion = "fastqspr-descriptors/1";

struct DescriptorSet {
  std::string name;
  std::vector<std::string> descriptors;
};

// Every descriptor identifier in catalogue order.
const std::vector<std::string>& CatalogueIds();

// "all" (full catalogue) or "core" (constitutional counts plus the five
// classic topological indices). Throws std::invalid_argument otherwise.
DescriptorSet GetDescriptorSet(std::string_view name);

using DescriptorVector = std::vector<double>;

// Values aligned with set.descriptors. A calculator that fails leaves
// kMissing in its slot; the call itself never throws for a valid set.
DescriptorVector ComputeAll(const mol::MolecularGraph& mol, const DescriptorSet& set);

// One row per molecule, computed in parallel and gathered by input index.
LabeledMatrix ComputeMatrix(std::span<const mol::MolecularGraph> molecules,
                            const DescriptorSet& set, std::size_t workers = 0);

}  // namespace fastqspr::desc

#endif  // FASTQSPR_DESCRIPTORS_CATALOGUE_H_
