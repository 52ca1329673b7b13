// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DESCRIPTORS_CONSTITUTIONAL_H_
#define FASTQSPR_DESCRIPTORS_CONSTITUTIONAL_H_

#include <optional>

#include "fastqspr/molparse/graph.h"

namespace fastqspr::desc {

struct ConstitutionalCounts {
  int heavy_atoms = 0;
  int bonds = 0;
  int rings = 0;
  int aromatic_atoms = 0;
  int heteroatoms = 0;  // heavy atoms other than carbon
  int hydrogens = 0;
  // Empty when some atom has no tabulated mass.
  std::optional<double> molecular_weight;
};

ConstitutionalCounts CountConstituents(const mol::MolecularGraph& mol);

}  // namespace fastqspr::desc

#endif  // FASTQSPR_DESCRIPTORS_CONSTITUTIONAL_H_
