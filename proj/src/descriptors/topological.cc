// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/descriptors/topological.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "fastqspr/molparse/element.h"

namespace fastqspr::desc {
namespace {

template <typename Fn>
double SumOverBonds(const DescriptorContext& ctx, Fn&& term) {
  double sum = 0.0;
  for (const auto& bond : ctx.mol().bonds()) {
    sum += term(static_cast<double>(ctx.degree(bond.a)), static_cast<double>(ctx.degree(bond.b)));
  }
  return sum;
}

template <typename Fn>
double SumOverPairs(const DescriptorContext& ctx, Fn&& term) {
  const auto& d = ctx.distances();
  double sum = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) sum += term(i, j, static_cast<double>(d(i, j)));
  }
  return sum;
}

// Kier-Hall valence delta. Atoms with no positive delta (CH4, the wildcard)
// are reported as 0 and left out of the valence connectivity sums.
double ValenceDelta(const mol::Atom& atom) {
  if (atom.atomic_number == 0) return 0.0;
  const auto& element = mol::ElementByNumber(atom.atomic_number);
  const double core = atom.atomic_number - element.valence_electrons - 1;
  const double delta = (element.valence_electrons - atom.total_h()) / core;
  return delta > 0.0 ? delta : 0.0;
}

long long CountPathsFrom(const mol::MolecularGraph& mol, int atom, int remaining,
                         std::vector<char>& on_path) {
  if (remaining == 0) return 1;
  long long count = 0;
  on_path[atom] = 1;
  for (int next : mol.neighbors(atom)) {
    if (!on_path[next]) count += CountPathsFrom(mol, next, remaining - 1, on_path);
  }
  on_path[atom] = 0;
  return count;
}

}  // namespace

const mol::DistanceMatrix& DescriptorContext::distances() const {
  if (!distances_) {
    try {
      distances_ = mol::ComputeDistanceMatrix(mol_);
    } catch (const mol::GraphError& e) {
      throw DescriptorError(e.what());
    }
  }
  return *distances_;
}

double WienerIndex(const DescriptorContext& ctx) {
  return SumOverPairs(ctx, [](int, int, double d) { return d; });
}

double AbcIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return std::sqrt((du + dv - 2.0) / (du * dv)); });
}

ZagrebIndices Zagreb(const DescriptorContext& ctx) {
  ZagrebIndices z;
  for (int i = 0; i < ctx.num_atoms(); ++i) z.m1 += static_cast<double>(ctx.degree(i)) * ctx.degree(i);
  z.m2 = SumOverBonds(ctx, [](double du, double dv) { return du * dv; });
  return z;
}

double RandicIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return 1.0 / std::sqrt(du * dv); });
}

double EccentricConnectivity(const DescriptorContext& ctx) {
  const auto& d = ctx.distances();
  double sum = 0.0;
  for (int i = 0; i < d.size(); ++i) sum += static_cast<double>(ctx.degree(i)) * d.Eccentricity(i);
  return sum;
}

double GeometricArithmeticIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return 2.0 * std::sqrt(du * dv) / (du + dv); });
}

double HarmonicIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return 2.0 / (du + dv); });
}

double SumConnectivityIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return 1.0 / std::sqrt(du + dv); });
}

double HyperZagrebIndex(const DescriptorContext& ctx) {
  return SumOverBonds(ctx, [](double du, double dv) { return (du + dv) * (du + dv); });
}

double ForgottenIndex(const DescriptorContext& ctx) {
  double sum = 0.0;
  for (int i = 0; i < ctx.num_atoms(); ++i) sum += std::pow(static_cast<double>(ctx.degree(i)), 3);
  return sum;
}

double Chi0(const DescriptorContext& ctx) {
  double sum = 0.0;
  for (int i = 0; i < ctx.num_atoms(); ++i) {
    if (ctx.degree(i) > 0) sum += 1.0 / std::sqrt(static_cast<double>(ctx.degree(i)));
  }
  return sum;
}

double Chi2Path(const DescriptorContext& ctx) {
  const auto& mol = ctx.mol();
  double sum = 0.0;
  for (int center = 0; center < mol.num_atoms(); ++center) {
    const auto nbrs = mol.neighbors(center);
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        sum += 1.0 / std::sqrt(static_cast<double>(ctx.degree(nbrs[x])) * ctx.degree(center) *
                               ctx.degree(nbrs[y]));
      }
    }
  }
  return sum;
}

double Chi0Valence(const DescriptorContext& ctx) {
  double sum = 0.0;
  for (const auto& atom : ctx.mol().atoms()) {
    const double delta = ValenceDelta(atom);
    if (delta > 0.0) sum += 1.0 / std::sqrt(delta);
  }
  return sum;
}

double Chi1Valence(const DescriptorContext& ctx) {
  const auto& atoms = ctx.mol().atoms();
  double sum = 0.0;
  for (const auto& bond : ctx.mol().bonds()) {
    const double du = ValenceDelta(atoms[bond.a]);
    const double dv = ValenceDelta(atoms[bond.b]);
    if (du > 0.0 && dv > 0.0) sum += 1.0 / std::sqrt(du * dv);
  }
  return sum;
}

double PathCount(const DescriptorContext& ctx, int length) {
  const auto& mol = ctx.mol();
  if (length == 0) return mol.num_atoms();
  std::vector<char> on_path(mol.num_atoms(), 0);
  long long ordered = 0;
  for (int start = 0; start < mol.num_atoms(); ++start) {
    ordered += CountPathsFrom(mol, start, length, on_path);
  }
  return static_cast<double>(ordered / 2);
}

double Kappa1(const DescriptorContext& ctx) {
  const double a = ctx.num_atoms();
  const double p1 = ctx.mol().num_bonds();
  if (p1 == 0) throw DescriptorError("kappa1 undefined without bonds");
  return a * (a - 1) * (a - 1) / (p1 * p1);
}

double Kappa2(const DescriptorContext& ctx) {
  const double a = ctx.num_atoms();
  const double p2 = PathCount(ctx, 2);
  if (p2 == 0) throw DescriptorError("kappa2 undefined without two-bond paths");
  return (a - 1) * (a - 2) * (a - 2) / (p2 * p2);
}

double Kappa3(const DescriptorContext& ctx) {
  const int atoms = ctx.num_atoms();
  const double a = atoms;
  const double p3 = PathCount(ctx, 3);
  if (p3 == 0) throw DescriptorError("kappa3 undefined without three-bond paths");
  if (atoms % 2 == 1) return (a - 1) * (a - 3) * (a - 3) / (p3 * p3);
  return (a - 3) * (a - 2) * (a - 2) / (p3 * p3);
}

double MeanDistance(const DescriptorContext& ctx) {
  const double n = ctx.num_atoms();
  if (n < 2) return 0.0;
  return 2.0 * WienerIndex(ctx) / (n * (n - 1));
}

double Diameter(const DescriptorContext& ctx) { return ctx.distances().Max(); }

double Radius(const DescriptorContext& ctx) {
  const auto& d = ctx.distances();
  int radius = d.size() > 0 ? d.Eccentricity(0) : 0;
  for (int i = 1; i < d.size(); ++i) radius = std::min(radius, d.Eccentricity(i));
  return radius;
}

double MeanEccentricity(const DescriptorContext& ctx) {
  const auto& d = ctx.distances();
  if (d.size() == 0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < d.size(); ++i) sum += d.Eccentricity(i);
  return sum / d.size();
}

double PetitjeanIndex(const DescriptorContext& ctx) {
  const double radius = Radius(ctx);
  if (radius == 0) throw DescriptorError("Petitjean index undefined for radius 0");
  return (Diameter(ctx) - radius) / radius;
}

double HararyIndex(const DescriptorContext& ctx) {
  return SumOverPairs(ctx, [](int, int, double d) { return 1.0 / d; });
}

double HyperWienerIndex(const DescriptorContext& ctx) {
  return 0.5 * SumOverPairs(ctx, [](int, int, double d) { return d + d * d; });
}

double BalabanJ(const DescriptorContext& ctx) {
  const auto& d = ctx.distances();
  const double bonds = ctx.mol().num_bonds();
  if (bonds == 0) return 0.0;
  const double cycles = bonds - ctx.num_atoms() + 1;
  double sum = 0.0;
  for (const auto& bond : ctx.mol().bonds()) {
    sum += 1.0 / std::sqrt(static_cast<double>(d.RowSum(bond.a)) * static_cast<double>(d.RowSum(bond.b)));
  }
  return bonds / (cycles + 1.0) * sum;
}

double GutmanIndex(const DescriptorContext& ctx) {
  return SumOverPairs(ctx, [&](int i, int j, double d) {
    return static_cast<double>(ctx.degree(i)) * ctx.degree(j) * d;
  });
}

double SchultzIndex(const DescriptorContext& ctx) {
  return SumOverPairs(ctx, [&](int i, int j, double d) {
    return static_cast<double>(ctx.degree(i) + ctx.degree(j)) * d;
  });
}

double DegreeEntropy(const DescriptorContext& ctx) {
  const int n = ctx.num_atoms();
  if (n == 0) return 0.0;
  std::map<int, int> counts;
  for (int i = 0; i < n; ++i) ++counts[ctx.degree(i)];
  double entropy = 0.0;
  for (const auto& [degree, count] : counts) {
    const double p = static_cast<double>(count) / n;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

double WienerIndex(const mol::MolecularGraph& mol) { return WienerIndex(DescriptorContext(mol)); }
double AbcIndex(const mol::MolecularGraph& mol) { return AbcIndex(DescriptorContext(mol)); }
ZagrebIndices Zagreb(const mol::MolecularGraph& mol) { return Zagreb(DescriptorContext(mol)); }
double RandicIndex(const mol::MolecularGraph& mol) { return RandicIndex(DescriptorContext(mol)); }
double EccentricConnectivity(const mol::MolecularGraph& mol) {
  return EccentricConnectivity(DescriptorContext(mol));
}

}  // namespace fastqspr::desc
