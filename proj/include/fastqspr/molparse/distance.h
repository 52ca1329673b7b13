// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_MOLPARSE_DISTANCE_H_
#define FASTQSPR_MOLPARSE_DISTANCE_H_

#include <vector>

#include "fastqspr/molparse/graph.h"

namespace fastqspr::mol {

// Topological (bond-count) distances between heavy atoms.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size, 0) {}

  int size() const { return size_; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * size_ + j]; }
  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * size_ + j]; }

  int Max() const;
  // Largest distance from atom i.
  int Eccentricity(int i) const;
  // Sum of row i.
  long long RowSum(int i) const;

 private:
  int size_ = 0;
  std::vector<int> data_;
};

// All-pairs shortest paths by breadth-first search from every atom. Throws
// GraphError on disconnected graphs; standardize first.
DistanceMatrix ComputeDistanceMatrix(const MolecularGraph& mol);

}  // namespace fastqspr::mol

#endif  // FASTQSPR_MOLPARSE_DISTANCE_H_
