// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/molparse/distance.h"

#include <algorithm>
#include <queue>

namespace fastqspr::mol {

int DistanceMatrix::Max() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

int DistanceMatrix::Eccentricity(int i) const {
  int ecc = 0;
  for (int j = 0; j < size_; ++j) ecc = std::max(ecc, (*this)(i, j));
  return ecc;
}

long long DistanceMatrix::RowSum(int i) const {
  long long sum = 0;
  for (int j = 0; j < size_; ++j) sum += (*this)(i, j);
  return sum;
}

DistanceMatrix ComputeDistanceMatrix(const MolecularGraph& mol) {
  const int n = mol.num_atoms();
  DistanceMatrix dist(n);
  std::vector<int> row(n);
  for (int source = 0; source < n; ++source) {
    std::fill(row.begin(), row.end(), -1);
    row[source] = 0;
    std::queue<int> queue;
    queue.push(source);
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : mol.neighbors(u)) {
        if (row[v] != -1) continue;
        row[v] = row[u] + 1;
        ++reached;
        queue.push(v);
      }
    }
    if (reached != n) {
      throw GraphError("distance matrix requires a connected graph; standardize first");
    }
    for (int j = 0; j < n; ++j) dist(source, j) = row[j];
  }
  return dist;
}

}  // namespace fastqspr::mol
