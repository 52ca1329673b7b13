// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/molparse/graph.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>

#include "fastqspr/molparse/element.h"

namespace fastqspr::mol {
namespace {

// Edge-incidence vector over GF(2).
using EdgeSet = std::vector<std::uint64_t>;

struct CandidateCycle {
  std::vector<int> atoms;
  EdgeSet edges;
};

bool IsZero(const EdgeSet& s) {
  return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
}

int LowestBit(const EdgeSet& s) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (s[w] != 0) return static_cast<int>(w * 64) + __builtin_ctzll(s[w]);
  }
  return -1;
}

bool TestBit(const EdgeSet& s, int bit) { return (s[bit / 64] >> (bit % 64)) & 1u; }

// Rotates a cycle to start at its smallest atom, walking toward the smaller
// of that atom's two ring neighbours.
std::vector<int> NormalizeCycle(std::vector<int> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace

std::string_view Atom::symbol() const { return ElementByNumber(atomic_number).symbol; }

MolecularGraph::MolecularGraph(std::vector<Atom> atoms, std::vector<Bond> bonds,
                               std::string source_smiles)
    : atoms_(std::move(atoms)),
      bonds_(std::move(bonds)),
      source_smiles_(std::move(source_smiles)) {
  for (int i = 0; i < num_atoms(); ++i) atoms_[i].index = i;
  BuildAdjacency();
  PerceiveRings();
}

void MolecularGraph::BuildAdjacency() {
  const int n = num_atoms();
  adjacency_.assign(n, {});
  incident_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (int k = 0; k < num_bonds(); ++k) {
    const Bond& bond = bonds_[k];
    if (bond.a < 0 || bond.b < 0 || bond.a >= n || bond.b >= n) {
      throw GraphError("bond references an atom out of range");
    }
    if (bond.a == bond.b) throw GraphError("bond joins an atom to itself");
    if (!seen.emplace(std::min(bond.a, bond.b), std::max(bond.a, bond.b)).second) {
      throw GraphError("duplicate bond between atoms " + std::to_string(bond.a) +
                       " and " + std::to_string(bond.b));
    }
    adjacency_[bond.a].push_back(bond.b);
    adjacency_[bond.b].push_back(bond.a);
    incident_[bond.a].push_back(k);
    incident_[bond.b].push_back(k);
  }
}

int MolecularGraph::BondIndex(int a, int b) const {
  const auto& nbrs = adjacency_[a];
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i] == b) return incident_[a][i];
  }
  return -1;
}

std::vector<int> MolecularGraph::ComponentLabels() const {
  std::vector<int> label(num_atoms(), -1);
  int next = 0;
  for (int start = 0; start < num_atoms(); ++start) {
    if (label[start] != -1) continue;
    std::queue<int> queue;
    queue.push(start);
    label[start] = next;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adjacency_[u]) {
        if (label[v] == -1) {
          label[v] = next;
          queue.push(v);
        }
      }
    }
    ++next;
  }
  return label;
}

int MolecularGraph::NumComponents() const {
  const auto labels = ComponentLabels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// Minimum cycle basis (Horton): candidate cycles are shortest-path pairs
// closed by one edge, accepted in length order when independent over GF(2).
void MolecularGraph::PerceiveRings() {
  const int n = num_atoms();
  const int m = num_bonds();
  ring_bond_.assign(m, false);
  ring_atom_.assign(n, false);
  rings_.clear();
  const int target = CyclomaticNumber();
  if (target <= 0) return;

  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  std::vector<CandidateCycle> candidates;
  std::set<EdgeSet> seen;

  std::vector<int> dist(n), parent(n), parent_bond(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(parent_bond.begin(), parent_bond.end(), -1);
    std::queue<int> queue;
    queue.push(root);
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < adjacency_[u].size(); ++i) {
        const int v = adjacency_[u][i];
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          parent_bond[v] = incident_[u][i];
          queue.push(v);
        }
      }
    }
    for (int k = 0; k < m; ++k) {
      const int x = bonds_[k].a;
      const int y = bonds_[k].b;
      if (dist[x] < 0 || dist[y] < 0) continue;
      if (parent_bond[x] == k || parent_bond[y] == k) continue;
      std::vector<int> path_x, path_y;
      for (int u = x; u != -1; u = parent[u]) path_x.push_back(u);
      for (int u = y; u != -1; u = parent[u]) path_y.push_back(u);
      // Paths must meet only at the root.
      std::set<int> on_x(path_x.begin(), path_x.end() - 1);
      bool simple = true;
      for (std::size_t i = 0; i + 1 < path_y.size(); ++i) {
        if (on_x.count(path_y[i])) {
          simple = false;
          break;
        }
      }
      if (!simple) continue;
      EdgeSet edges(words, 0);
      auto set_bit = [&](int bond) { edges[bond / 64] |= (std::uint64_t{1} << (bond % 64)); };
      set_bit(k);
      for (std::size_t i = 0; i + 1 < path_x.size(); ++i) set_bit(parent_bond[path_x[i]]);
      for (std::size_t i = 0; i + 1 < path_y.size(); ++i) set_bit(parent_bond[path_y[i]]);
      if (!seen.insert(edges).second) continue;
      std::vector<int> cycle(path_x.rbegin(), path_x.rend());
      cycle.insert(cycle.end(), path_y.begin(), path_y.end() - 1);
      candidates.push_back({NormalizeCycle(std::move(cycle)), std::move(edges)});
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CandidateCycle& l, const CandidateCycle& r) {
                     if (l.atoms.size() != r.atoms.size()) return l.atoms.size() < r.atoms.size();
                     return l.atoms < r.atoms;
                   });

  std::map<int, EdgeSet> basis;  // pivot bit -> reduced row
  for (const auto& candidate : candidates) {
    EdgeSet reduced = candidate.edges;
    for (int pivot = LowestBit(reduced); pivot >= 0;) {
      auto it = basis.find(pivot);
      if (it == basis.end()) break;
      for (std::size_t w = 0; w < words; ++w) reduced[w] ^= it->second[w];
      pivot = LowestBit(reduced);
    }
    if (IsZero(reduced)) continue;
    basis.emplace(LowestBit(reduced), std::move(reduced));
    rings_.push_back(candidate.atoms);
    for (int k = 0; k < m; ++k) {
      if (TestBit(candidate.edges, k)) ring_bond_[k] = true;
    }
    for (int a : candidate.atoms) ring_atom_[a] = true;
    if (static_cast<int>(rings_.size()) == target) break;
  }
}

MolecularGraph PermuteAtoms(const MolecularGraph& mol, std::span<const int> order) {
  if (static_cast<int>(order.size()) != mol.num_atoms()) {
    throw GraphError("permutation length does not match atom count");
  }
  std::vector<int> new_index(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);
  std::vector<Atom> atoms;
  atoms.reserve(order.size());
  for (int old : order) atoms.push_back(mol.atoms()[old]);
  std::vector<Bond> bonds;
  bonds.reserve(mol.bonds().size());
  for (const Bond& b : mol.bonds()) bonds.push_back({new_index[b.a], new_index[b.b], b.order});
  return MolecularGraph(std::move(atoms), std::move(bonds), mol.source_smiles());
}

}  // namespace fastqspr::mol
