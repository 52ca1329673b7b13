// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_MOLPARSE_SMILES_H_
#define FASTQSPR_MOLPARSE_SMILES_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fastqspr/molparse/graph.h"

namespace fastqspr::mol {

class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses a SMILES string into a validated heavy-atom graph.
//
// Supported: organic-subset atoms (B C N O P S F Cl Br I and aromatic
// b c n o p s), bracket atoms with isotope, explicit H count and charge,
// ring-bond digits 0-9 and %nn, branches, bond symbols - = # : and the
// wildcard atom *. Stereo marks (/ \ @) are accepted and dropped.
//
// After the graph is assembled, lowercase atoms are kekulized by perfect
// matching to place their implied double bonds, implicit hydrogens are
// assigned from the smallest standard valence that fits, and rings written
// in Kekule form are marked aromatic when their pi-electron count is 4n+2.
//
// Throws SmilesError on malformed input, unknown or unsupported elements,
// unclosed rings or branches, aromatic systems with no Kekule form, and
// valence violations.
MolecularGraph ParseSmiles(std::string_view smiles);

}  // namespace fastqspr::mol

#endif  // FASTQSPR_MOLPARSE_SMILES_H_
