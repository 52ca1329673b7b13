// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_MOLPARSE_GRAPH_H_
#define FASTQSPR_MOLPARSE_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fastqspr::mol {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

struct Atom {
  int atomic_number = 6;
  int formal_charge = 0;
  bool is_aromatic = false;
  int explicit_h = 0;
  int implicit_h = 0;
  int index = 0;

  std::string_view symbol() const;
  int total_h() const { return explicit_h + implicit_h; }

  bool operator==(const Atom&) const = default;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::kSingle;

  bool operator==(const Bond&) const = default;
};

// Raised for structurally invalid graphs (self loops, duplicate bonds,
// out-of-range indices) and for operations that need a connected graph.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Heavy-atom molecular graph. Hydrogens are carried as counts on atoms.
// Construction builds adjacency and the smallest set of smallest rings; it
// does not check valences (the SMILES parser does).
class MolecularGraph {
 public:
  MolecularGraph() = default;
  MolecularGraph(std::vector<Atom> atoms, std::vector<Bond> bonds,
                 std::string source_smiles = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  // Each ring is an ordered atom cycle.
  const std::vector<std::vector<int>>& rings() const { return rings_; }
  const std::string& source_smiles() const { return source_smiles_; }

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  int degree(int atom) const { return static_cast<int>(adjacency_[atom].size()); }
  std::span<const int> neighbors(int atom) const { return adjacency_[atom]; }
  // Bond indices incident to an atom, parallel to neighbors().
  std::span<const int> incident_bonds(int atom) const { return incident_[atom]; }

  // Index of the bond joining two atoms, or -1.
  int BondIndex(int a, int b) const;
  bool IsRingBond(int bond) const { return ring_bond_[bond]; }
  bool IsRingAtom(int atom) const { return ring_atom_[atom]; }

  // Component label per atom, labels numbered by first appearance.
  std::vector<int> ComponentLabels() const;
  int NumComponents() const;
  bool IsConnected() const { return NumComponents() <= 1; }
  int CyclomaticNumber() const { return num_bonds() - num_atoms() + NumComponents(); }

  bool operator==(const MolecularGraph& other) const {
    return atoms_ == other.atoms_ && bonds_ == other.bonds_;
  }

 private:
  void BuildAdjacency();
  void PerceiveRings();

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> rings_;
  std::string source_smiles_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> ring_bond_;
  std::vector<bool> ring_atom_;
};

// Relabels atoms so that new index i holds old atom order[i]. Used to check
// that graph invariants do not depend on input order.
MolecularGraph PermuteAtoms(const MolecularGraph& mol, std::span<const int> order);

}  // namespace fastqspr::mol

#endif  // FASTQSPR_MOLPARSE_GRAPH_H_
