// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_SRC_MOLPARSE_MATCHING_H_
#define FASTQSPR_SRC_MOLPARSE_MATCHING_H_

#include <vector>

namespace fastqspr::mol::internal {

// Maximum-cardinality matching on a general graph (Edmonds' blossom
// algorithm). Returns mate[v] or -1 for unmatched vertices.
std::vector<int> MaximumMatching(const std::vector<std::vector<int>>& adjacency);

}  // namespace fastqspr::mol::internal

#endif  // FASTQSPR_SRC_MOLPARSE_MATCHING_H_
