// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/descriptors/catalogue.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fastqspr/common/missing.h"
#include "fastqspr/common/parallel.h"
#include "fastqspr/descriptors/constitutional.h"
#include "fastqspr/descriptors/topological.h"
#include "fastqspr/molparse/element.h"

namespace fastqspr::desc {
namespace {

using Calculator = std::function<double(const DescriptorContext&)>;

struct Entry {
  std::string id;
  Calculator fn;
  bool core = false;
};

int CountElement(const mol::MolecularGraph& mol, std::initializer_list<int> numbers) {
  return static_cast<int>(std::count_if(mol.atoms().begin(), mol.atoms().end(), [&](const auto& a) {
    return std::find(numbers.begin(), numbers.end(), a.atomic_number) != numbers.end();
  }));
}

int CountBonds(const mol::MolecularGraph& mol, mol::BondOrder order) {
  return static_cast<int>(std::count_if(mol.bonds().begin(), mol.bonds().end(),
                                        [&](const auto& b) { return b.order == order; }));
}

// Kekulized graphs store alternating orders, so a bond is aromatic when it
// lies on a ring whose atoms are all aromatic.
std::vector<bool> AromaticBondMask(const mol::MolecularGraph& mol) {
  std::vector<bool> mask(mol.num_bonds(), false);
  for (const auto& ring : mol.rings()) {
    if (!std::all_of(ring.begin(), ring.end(), [&](int a) { return mol.atoms()[a].is_aromatic; })) {
      continue;
    }
    for (std::size_t k = 0; k < ring.size(); ++k) {
      mask[mol.BondIndex(ring[k], ring[(k + 1) % ring.size()])] = true;
    }
  }
  return mask;
}

double RotatableBonds(const mol::MolecularGraph& mol) {
  int count = 0;
  for (int i = 0; i < mol.num_bonds(); ++i) {
    const auto& bond = mol.bonds()[i];
    if (bond.order != mol::BondOrder::kSingle || mol.IsRingBond(i)) continue;
    if (mol.degree(bond.a) > 1 && mol.degree(bond.b) > 1) ++count;
  }
  return count;
}

double FractionSp3Carbon(const mol::MolecularGraph& mol) {
  int carbons = 0;
  int sp3 = 0;
  for (int i = 0; i < mol.num_atoms(); ++i) {
    const auto& atom = mol.atoms()[i];
    if (atom.atomic_number != 6) continue;
    ++carbons;
    if (atom.is_aromatic) continue;
    const auto incident = mol.incident_bonds(i);
    if (std::all_of(incident.begin(), incident.end(), [&](int b) {
          return mol.bonds()[b].order == mol::BondOrder::kSingle;
        })) {
      ++sp3;
    }
  }
  if (carbons == 0) throw DescriptorError("Fsp3 undefined without carbon");
  return static_cast<double>(sp3) / carbons;
}

double ElementEntropy(const mol::MolecularGraph& mol) {
  std::map<int, int> counts;
  int total = 0;
  for (const auto& atom : mol.atoms()) {
    ++counts[atom.atomic_number];
    ++total;
    if (atom.total_h() > 0) {
      counts[1] += atom.total_h();
      total += atom.total_h();
    }
  }
  double entropy = 0.0;
  for (const auto& [z, c] : counts) {
    const double p = static_cast<double>(c) / total;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

double Ratio(double numerator, double denominator, const char* what) {
  if (denominator == 0.0) throw DescriptorError(std::string(what) + " undefined for an empty molecule");
  return numerator / denominator;
}

double MolecularWeight(const mol::MolecularGraph& mol) {
  const auto counts = CountConstituents(mol);
  if (!counts.molecular_weight) throw DescriptorError("atom without tabulated mass");
  return *counts.molecular_weight;
}

std::vector<Entry> BuildCatalogue() {
  using mol::BondOrder;
  std::vector<Entry> c;
  auto add = [&](std::string id, Calculator fn, bool core = false) {
    c.push_back({std::move(id), std::move(fn), core});
  };
  auto counts = [](const DescriptorContext& ctx) { return CountConstituents(ctx.mol()); };

  // Constitutional.
  add("heavy_atom_count", [=](const auto& ctx) { return double(counts(ctx).heavy_atoms); }, true);
  add("bond_count", [=](const auto& ctx) { return double(counts(ctx).bonds); }, true);
  add("ring_count", [=](const auto& ctx) { return double(counts(ctx).rings); }, true);
  add("aromatic_atom_count", [=](const auto& ctx) { return double(counts(ctx).aromatic_atoms); }, true);
  add("heteroatom_count", [=](const auto& ctx) { return double(counts(ctx).heteroatoms); }, true);
  add("hydrogen_count", [=](const auto& ctx) { return double(counts(ctx).hydrogens); }, true);
  add("molecular_weight", [](const auto& ctx) { return MolecularWeight(ctx.mol()); }, true);
  add("carbon_count", [](const auto& ctx) { return double(CountElement(ctx.mol(), {6})); });
  add("nitrogen_count", [](const auto& ctx) { return double(CountElement(ctx.mol(), {7})); });
  add("oxygen_count", [](const auto& ctx) { return double(CountElement(ctx.mol(), {8})); });
  add("sulfur_count", [](const auto& ctx) { return double(CountElement(ctx.mol(), {16})); });
  add("halogen_count", [](const auto& ctx) { return double(CountElement(ctx.mol(), {9, 17, 35, 53})); });
  add("aromatic_bond_count", [](const auto& ctx) {
    const auto mask = AromaticBondMask(ctx.mol());
    return double(std::count(mask.begin(), mask.end(), true));
  });
  add("double_bond_count", [](const auto& ctx) {
    const auto mask = AromaticBondMask(ctx.mol());
    int n = 0;
    for (int i = 0; i < ctx.mol().num_bonds(); ++i) {
      n += ctx.mol().bonds()[i].order == BondOrder::kDouble && !mask[i];
    }
    return double(n);
  });
  add("triple_bond_count", [](const auto& ctx) { return double(CountBonds(ctx.mol(), BondOrder::kTriple)); });
  add("rotatable_bond_count", [](const auto& ctx) { return RotatableBonds(ctx.mol()); });
  add("ring_atom_count", [](const auto& ctx) {
    int n = 0;
    for (int i = 0; i < ctx.num_atoms(); ++i) n += ctx.mol().IsRingAtom(i);
    return double(n);
  });
  add("aromatic_ring_count", [](const auto& ctx) {
    const auto& mol = ctx.mol();
    return double(std::count_if(mol.rings().begin(), mol.rings().end(), [&](const auto& ring) {
      return std::all_of(ring.begin(), ring.end(), [&](int a) { return mol.atoms()[a].is_aromatic; });
    }));
  });
  add("largest_ring_size", [](const auto& ctx) {
    std::size_t largest = 0;
    for (const auto& ring : ctx.mol().rings()) largest = std::max(largest, ring.size());
    return double(largest);
  });
  add("net_charge", [](const auto& ctx) {
    int q = 0;
    for (const auto& a : ctx.mol().atoms()) q += a.formal_charge;
    return double(q);
  });

  // Fractions.
  add("heteroatom_fraction", [=](const auto& ctx) {
    const auto k = counts(ctx);
    return Ratio(k.heteroatoms, k.heavy_atoms, "heteroatom fraction");
  });
  add("aromatic_fraction", [=](const auto& ctx) {
    const auto k = counts(ctx);
    return Ratio(k.aromatic_atoms, k.heavy_atoms, "aromatic fraction");
  });
  add("fraction_sp3_carbon", [](const auto& ctx) { return FractionSp3Carbon(ctx.mol()); });
  add("hydrogen_per_heavy_atom", [=](const auto& ctx) {
    const auto k = counts(ctx);
    return Ratio(k.hydrogens, k.heavy_atoms, "hydrogen ratio");
  });
  add("nitrogen_oxygen_fraction", [](const auto& ctx) {
    return Ratio(CountElement(ctx.mol(), {7, 8}), ctx.num_atoms(), "N+O fraction");
  });
  add("halogen_fraction", [](const auto& ctx) {
    return Ratio(CountElement(ctx.mol(), {9, 17, 35, 53}), ctx.num_atoms(), "halogen fraction");
  });
  add("mean_atomic_weight", [=](const auto& ctx) {
    const auto k = counts(ctx);
    return Ratio(MolecularWeight(ctx.mol()), k.heavy_atoms + k.hydrogens, "mean atomic weight");
  });

  // Degree-based indices.
  add("wiener", [](const auto& ctx) { return WienerIndex(ctx); }, true);
  add("abc", [](const auto& ctx) { return AbcIndex(ctx); }, true);
  add("zagreb_m1", [](const auto& ctx) { return Zagreb(ctx).m1; }, true);
  add("zagreb_m2", [](const auto& ctx) { return Zagreb(ctx).m2; }, true);
  add("randic", [](const auto& ctx) { return RandicIndex(ctx); }, true);
  add("eccentric_connectivity", [](const auto& ctx) { return EccentricConnectivity(ctx); }, true);
  add("geometric_arithmetic", [](const auto& ctx) { return GeometricArithmeticIndex(ctx); });
  add("harmonic", [](const auto& ctx) { return HarmonicIndex(ctx); });
  add("sum_connectivity", [](const auto& ctx) { return SumConnectivityIndex(ctx); });
  add("hyper_zagreb", [](const auto& ctx) { return HyperZagrebIndex(ctx); });
  add("forgotten", [](const auto& ctx) { return ForgottenIndex(ctx); });
  add("chi0", [](const auto& ctx) { return Chi0(ctx); });
  add("chi2_path", [](const auto& ctx) { return Chi2Path(ctx); });
  add("chi0_valence", [](const auto& ctx) { return Chi0Valence(ctx); });
  add("chi1_valence", [](const auto& ctx) { return Chi1Valence(ctx); });
  for (int d = 1; d <= 4; ++d) {
    add(d < 4 ? "degree" + std::to_string(d) + "_count" : "degree4plus_count", [d](const auto& ctx) {
      int n = 0;
      for (int i = 0; i < ctx.num_atoms(); ++i) n += d < 4 ? ctx.degree(i) == d : ctx.degree(i) >= 4;
      return double(n);
    });
  }
  for (int len = 2; len <= 4; ++len) {
    add("path_count_" + std::to_string(len), [len](const auto& ctx) { return PathCount(ctx, len); });
  }
  add("kappa1", [](const auto& ctx) { return Kappa1(ctx); });
  add("kappa2", [](const auto& ctx) { return Kappa2(ctx); });
  add("kappa3", [](const auto& ctx) { return Kappa3(ctx); });

  // Distance-based indices.
  add("mean_distance", [](const auto& ctx) { return MeanDistance(ctx); });
  add("diameter", [](const auto& ctx) { return Diameter(ctx); });
  add("radius", [](const auto& ctx) { return Radius(ctx); });
  add("mean_eccentricity", [](const auto& ctx) { return MeanEccentricity(ctx); });
  add("petitjean", [](const auto& ctx) { return PetitjeanIndex(ctx); });
  add("harary", [](const auto& ctx) { return HararyIndex(ctx); });
  add("hyper_wiener", [](const auto& ctx) { return HyperWienerIndex(ctx); });
  add("balaban_j", [](const auto& ctx) { return BalabanJ(ctx); });
  add("gutman", [](const auto& ctx) { return GutmanIndex(ctx); });
  add("schultz", [](const auto& ctx) { return SchultzIndex(ctx); });

  // Information content.
  add("degree_entropy", [](const auto& ctx) { return DegreeEntropy(ctx); });
  add("element_entropy", [](const auto& ctx) { return ElementEntropy(ctx.mol()); });
  return c;
}

const std::vector<Entry>& Catalogue() {
  static const std::vector<Entry> catalogue = BuildCatalogue();
  return catalogue;
}

const std::unordered_map<std::string, std::size_t>& CatalogueIndex() {
  static const auto index = [] {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < Catalogue().size(); ++i) m.emplace(Catalogue()[i].id, i);
    return m;
  }();
  return index;
}

}  // namespace

const std::vector<std::string>& CatalogueIds() {
  static const auto ids = [] {
    std::vector<std::string> v;
    for (const auto& e : Catalogue()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

DescriptorSet GetDescriptorSet(std::string_view name) {
  DescriptorSet set{std::string(name), {}};
  if (name == "all") {
    set.descriptors = CatalogueIds();
  } else if (name == "core") {
    for (const auto& e : Catalogue()) {
      if (e.core) set.descriptors.push_back(e.id);
    }
  } else {
    throw std::invalid_argument("unknown descriptor set '" + std::string(name) +
                                "' (expected 'all' or 'core')");
  }
  return set;
}

DescriptorVector ComputeAll(const mol::MolecularGraph& mol, const DescriptorSet& set) {
  DescriptorContext ctx(mol);
  DescriptorVector out;
  out.reserve(set.descriptors.size());
  for (const auto& id : set.descriptors) {
    const auto it = CatalogueIndex().find(id);
    if (it == CatalogueIndex().end()) throw std::invalid_argument("unknown descriptor '" + id + "'");
    double value = kMissing;
    try {
      value = Catalogue()[it->second].fn(ctx);
      if (!std::isfinite(value)) value = kMissing;
    } catch (const std::exception&) {
      value = kMissing;
    }
    out.push_back(value);
  }
  return out;
}

LabeledMatrix ComputeMatrix(std::span<const mol::MolecularGraph> molecules, const DescriptorSet& set,
                            std::size_t workers) {
  LabeledMatrix result;
  result.columns = set.descriptors;
  result.values.resize(static_cast<Eigen::Index>(molecules.size()),
                       static_cast<Eigen::Index>(set.descriptors.size()));
  // Validate ids up front so workers never throw.
  for (const auto& id : set.descriptors) {
    if (!CatalogueIndex().contains(id)) throw std::invalid_argument("unknown descriptor '" + id + "'");
  }
  ParallelFor(
      molecules.size(),
      [&](std::size_t i) {
        const auto row = ComputeAll(molecules[i], set);
        for (std::size_t j = 0; j < row.size(); ++j) {
          result.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
        }
      },
      workers);
  return result;
}

}  // namespace fastqspr::desc
