// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "matching.h"

#include <algorithm>
#include <queue>

namespace fastqspr::mol::internal {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<int>>& adjacency)
      : graph_(adjacency),
        n_(static_cast<int>(adjacency.size())),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<int> Run() {
    // Greedy start; augmenting paths finish the job.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int to : graph_[v]) {
        if (mate_[to] == -1) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int v = FindAugmentingPath(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  int LowestCommonAncestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int FindAugmentingPath(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : graph_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int current = LowestCommonAncestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          MarkPath(v, current, to);
          MarkPath(to, current, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& graph_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

std::vector<int> MaximumMatching(const std::vector<std::vector<int>>& adjacency) {
  return BlossomMatcher(adjacency).Run();
}

}  // namespace fastqspr::mol::internal
