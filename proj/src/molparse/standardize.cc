// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/molparse/standardize.h"

#include <algorithm>
#include <string>
#include <vector>

namespace fastqspr::mol {

MolecularGraph Standardize(const MolecularGraph& mol) {
  const int components = mol.NumComponents();
  if (components <= 1) return mol;

  const auto labels = mol.ComponentLabels();
  std::vector<int> sizes(components, 0);
  std::vector<std::vector<std::string>> symbols(components);
  for (int i = 0; i < mol.num_atoms(); ++i) {
    ++sizes[labels[i]];
    symbols[labels[i]].emplace_back(mol.atoms()[i].symbol());
  }
  for (auto& s : symbols) std::sort(s.begin(), s.end());

  int best = 0;
  for (int c = 1; c < components; ++c) {
    if (sizes[c] > sizes[best] || (sizes[c] == sizes[best] && symbols[c] < symbols[best])) {
      best = c;
    }
  }

  std::vector<int> new_index(mol.num_atoms(), -1);
  std::vector<Atom> atoms;
  for (int i = 0; i < mol.num_atoms(); ++i) {
    if (labels[i] != best) continue;
    new_index[i] = static_cast<int>(atoms.size());
    atoms.push_back(mol.atoms()[i]);
  }
  std::vector<Bond> bonds;
  for (const Bond& b : mol.bonds()) {
    if (labels[b.a] != best) continue;
    bonds.push_back({new_index[b.a], new_index[b.b], b.order});
  }
  return MolecularGraph(std::move(atoms), std::move(bonds), mol.source_smiles());
}

}  // namespace fastqspr::mol
