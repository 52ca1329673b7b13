// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DESCRIPTORS_TOPOLOGICAL_H_
#define FASTQSPR_DESCRIPTORS_TOPOLOGICAL_H_

#include <optional>
#include <stdexcept>

#include "fastqspr/molparse/distance.h"
#include "fastqspr/molparse/graph.h"

namespace fastqspr::desc {

// A calculator could not produce a value for this molecule.
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared per-molecule state for the calculators. The distance matrix is
// built on first use; asking for it on a disconnected graph throws
// DescriptorError.
class DescriptorContext {
 public:
  explicit DescriptorContext(const mol::MolecularGraph& mol) : mol_(mol) {}

  const mol::MolecularGraph& mol() const { return mol_; }
  int num_atoms() const { return mol_.num_atoms(); }
  int degree(int atom) const { return mol_.degree(atom); }
  const mol::DistanceMatrix& distances() const;

 private:
  const mol::MolecularGraph& mol_;
  mutable std::optional<mol::DistanceMatrix> distances_;
};

struct ZagrebIndices {
  double m1 = 0.0;  // sum of squared vertex degrees
  double m2 = 0.0;  // sum over bonds of degree products
};

// Degrees are heavy-atom degrees throughout; hydrogens are implicit.

// Sum of shortest-path distances over unordered heavy-atom pairs.
double WienerIndex(const DescriptorContext& ctx);
// Sum over bonds of sqrt((du + dv - 2) / (du dv)).
double AbcIndex(const DescriptorContext& ctx);
ZagrebIndices Zagreb(const DescriptorContext& ctx);
// Sum over bonds of 1 / sqrt(du dv).
double RandicIndex(const DescriptorContext& ctx);
// Sum over atoms of degree times eccentricity.
double EccentricConnectivity(const DescriptorContext& ctx);

double GeometricArithmeticIndex(const DescriptorContext& ctx);
double HarmonicIndex(const DescriptorContext& ctx);
double SumConnectivityIndex(const DescriptorContext& ctx);
double HyperZagrebIndex(const DescriptorContext& ctx);
double ForgottenIndex(const DescriptorContext& ctx);
double Chi0(const DescriptorContext& ctx);
double Chi2Path(const DescriptorContext& ctx);
double Chi0Valence(const DescriptorContext& ctx);
double Chi1Valence(const DescriptorContext& ctx);
// Number of simple paths with the given bond count (unordered).
double PathCount(const DescriptorContext& ctx, int length);
double Kappa1(const DescriptorContext& ctx);
double Kappa2(const DescriptorContext& ctx);
double Kappa3(const DescriptorContext& ctx);
double MeanDistance(const DescriptorContext& ctx);
double Diameter(const DescriptorContext& ctx);
double Radius(const DescriptorContext& ctx);
double MeanEccentricity(const DescriptorContext& ctx);
double PetitjeanIndex(const DescriptorContext& ctx);
double HararyIndex(const DescriptorContext& ctx);
double HyperWienerIndex(const DescriptorContext& ctx);
double BalabanJ(const DescriptorContext& ctx);
double GutmanIndex(const DescriptorContext& ctx);
double SchultzIndex(const DescriptorContext& ctx);
// Shannon entropy (bits) of the heavy-atom degree distribution.
double DegreeEntropy(const DescriptorContext& ctx);

// Convenience wrappers for a standalone molecule.
double WienerIndex(const mol::MolecularGraph& mol);
double AbcIndex(const mol::MolecularGraph& mol);
ZagrebIndices Zagreb(const mol::MolecularGraph& mol);
double RandicIndex(const mol::MolecularGraph& mol);
double EccentricConnectivity(const mol::MolecularGraph& mol);

}  // namespace fastqspr::desc

#endif  // FASTQSPR_DESCRIPTORS_TOPOLOGICAL_H_
