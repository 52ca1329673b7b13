// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_MOLPARSE_STANDARDIZE_H_
#define FASTQSPR_MOLPARSE_STANDARDIZE_H_

#include "fastqspr/molparse/graph.h"

namespace fastqspr::mol {

// Keeps the largest connected fragment (salt and solvent stripping). Ties go
// to the fragment whose sorted element-symbol sequence is lexicographically
// first, then to the earliest fragment. Atoms keep their relative input order.
// Identity on single-fragment molecules.
MolecularGraph Standardize(const MolecularGraph& mol);

}  // namespace fastqspr::mol

#endif  // FASTQSPR_MOLPARSE_STANDARDIZE_H_
