// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/descriptors/constitutional.h"

#include "fastqspr/molparse/element.h"

namespace fastqspr::desc {

ConstitutionalCounts CountConstituents(const mol::MolecularGraph& mol) {
  ConstitutionalCounts counts;
  counts.heavy_atoms = mol.num_atoms();
  counts.bonds = mol.num_bonds();
  counts.rings = static_cast<int>(mol.rings().size());
  double weight = 0.0;
  bool weight_known = true;
  for (const auto& atom : mol.atoms()) {
    if (atom.is_aromatic) ++counts.aromatic_atoms;
    if (atom.atomic_number != 6) ++counts.heteroatoms;
    counts.hydrogens += atom.total_h();
    const auto& mass = mol::ElementByNumber(atom.atomic_number).mass;
    if (mass) {
      weight += *mass + atom.total_h() * mol::HydrogenMass();
    } else {
      weight_known = false;
    }
  }
  if (weight_known) counts.molecular_weight = weight;
  return counts;
}

}  // namespace fastqspr::desc
