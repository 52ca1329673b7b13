// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include <gtest/gtest.h>

#include "fastqspr/common/missing.h"
#include "fastqspr/descriptors/catalogue.h"
#include "fastqspr/descriptors/constitutional.h"
#include "fastqspr/descriptors/topological.h"
#include "fastqspr/molparse/smiles.h"
#include "support/descriptor_oracles.h"

namespace fastqspr::desc {
namespace {

using mol::Atom;
using mol::Bond;
using mol::BondOrder;
using mol::MolecularGraph;
using mol::ParseSmiles;

using testing::CarbonGraph;
using testing::PathGraph;

std::vector<std::string> PahSmiles() {
  return testing::SmilesColumn(std::string(FASTQSPR_DATA_DIR) + "/pah/pah_logp.csv");
}

void ExpectMatchesOracle(const MolecularGraph& mol, const std::string& label) {
  for (const auto& c : testing::CompareWithOracle(mol)) {
    EXPECT_TRUE(c.Matches(1e-10)) << label << " " << c.name << ": " << c.implemented << " vs " << c.oracle;
  }
}

TEST(TopologicalTest, ButaneReferenceValues) {
  const auto mol = ParseSmiles("CCCC");
  EXPECT_DOUBLE_EQ(WienerIndex(mol), 10);
  EXPECT_NEAR(AbcIndex(mol), 2.1213, 5e-5);
  EXPECT_DOUBLE_EQ(Zagreb(mol).m1, 10);
  EXPECT_DOUBLE_EQ(Zagreb(mol).m2, 8);
  EXPECT_NEAR(RandicIndex(mol), 1.9142, 5e-5);
  EXPECT_DOUBLE_EQ(EccentricConnectivity(mol), 14);
}

TEST(TopologicalTest, BenzeneReferenceValues) {
  const auto mol = ParseSmiles("c1ccccc1");
  EXPECT_DOUBLE_EQ(WienerIndex(mol), 27);
  EXPECT_NEAR(AbcIndex(mol), 4.2426, 5e-5);
  EXPECT_DOUBLE_EQ(Zagreb(mol).m1, 24);
  EXPECT_DOUBLE_EQ(Zagreb(mol).m2, 24);
  EXPECT_DOUBLE_EQ(RandicIndex(mol), 3.0);
  EXPECT_DOUBLE_EQ(EccentricConnectivity(mol), 36);
}

TEST(TopologicalTest, SingleAtomAndEthane) {
  const auto methane = ParseSmiles("C");
  EXPECT_EQ(WienerIndex(methane), 0);
  EXPECT_EQ(Zagreb(methane).m1, 0);
  EXPECT_EQ(Zagreb(methane).m2, 0);
  EXPECT_EQ(RandicIndex(methane), 0);
  EXPECT_EQ(EccentricConnectivity(methane), 0);
  EXPECT_EQ(AbcIndex(ParseSmiles("CC")), 0);
}

TEST(TopologicalTest, DisconnectedGraphFailsDistanceIndices) {
  const auto mol = ParseSmiles("CC.CC");
  EXPECT_THROW(WienerIndex(mol), DescriptorError);
  EXPECT_THROW(EccentricConnectivity(mol), DescriptorError);
  EXPECT_NO_THROW(RandicIndex(mol));
}

TEST(TopologicalTest, PathCycleAndStarGraphsMatchOracle) {
  for (const auto& [label, graph] : testing::SmallGraphFamilies(12)) ExpectMatchesOracle(graph, label);
}

TEST(TopologicalTest, PathGraphWienerClosedForm) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(WienerIndex(PathGraph(n)), (n * n * n - n) / 6);
}

TEST(TopologicalTest, RandomTreesAndPahsMatchOracle) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 11;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(gen), v);
    ExpectMatchesOracle(CarbonGraph(n, edges), "tree " + std::to_string(trial));
  }
  for (const auto& s : PahSmiles()) ExpectMatchesOracle(ParseSmiles(s), s);
}

TEST(TopologicalTest, WienerIncreasesAlongAlkanes) {
  double previous = -1;
  for (int n = 2; n <= 10; ++n) {
    const double w = WienerIndex(ParseSmiles(std::string(n, 'C')));
    EXPECT_GT(w, previous);
    previous = w;
  }
}

TEST(TopologicalTest, KappaShapeReferenceValues) {
  // Hand counts for n-pentane: A = 5, P1 = 4, P2 = 3, P3 = 2.
  const auto mol = ParseSmiles("CCCCC");
  const DescriptorContext ctx(mol);
  EXPECT_DOUBLE_EQ(Kappa1(ctx), 5.0 * 16 / 16);
  EXPECT_DOUBLE_EQ(Kappa2(ctx), 4.0 * 9 / 9);
  EXPECT_DOUBLE_EQ(Kappa3(ctx), 4.0 * 4 / 4);
  EXPECT_THROW(Kappa1(DescriptorContext(ParseSmiles("C"))), DescriptorError);
}

TEST(ConstitutionalTest, BenzeneMethaneEthanol) {
  const auto benzene = CountConstituents(ParseSmiles("c1ccccc1"));
  EXPECT_EQ(benzene.heavy_atoms, 6);
  EXPECT_EQ(benzene.bonds, 6);
  EXPECT_EQ(benzene.rings, 1);
  EXPECT_EQ(benzene.aromatic_atoms, 6);
  EXPECT_EQ(benzene.heteroatoms, 0);
  EXPECT_EQ(benzene.hydrogens, 6);
  ASSERT_TRUE(benzene.molecular_weight);
  EXPECT_NEAR(*benzene.molecular_weight, 6 * 12.011 + 6 * 1.008, 1e-9);
  EXPECT_NEAR(*benzene.molecular_weight, 78.114, 5e-4);

  const auto methane = CountConstituents(ParseSmiles("C"));
  EXPECT_EQ(methane.heavy_atoms, 1);
  EXPECT_EQ(methane.bonds, 0);
  EXPECT_EQ(methane.rings, 0);
  EXPECT_EQ(methane.hydrogens, 4);
  EXPECT_NEAR(*methane.molecular_weight, 16.043, 5e-4);

  EXPECT_EQ(CountConstituents(ParseSmiles("CCO")).heteroatoms, 1);
  EXPECT_FALSE(CountConstituents(ParseSmiles("*CC")).molecular_weight);
}

TEST(CatalogueTest, IdsAreUniqueAndSetsResolve) {
  const auto& ids = CatalogueIds();
  EXPECT_GE(ids.size(), 55u);
  EXPECT_EQ(std::unordered_set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  EXPECT_EQ(GetDescriptorSet("all").descriptors, ids);
  const auto core = GetDescriptorSet("core");
  EXPECT_EQ(core.descriptors.size(), 13u);
  for (const auto& id : core.descriptors) EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end());
  EXPECT_THROW(GetDescriptorSet("mordred"), std::invalid_argument);
}

TEST(CatalogueTest, BenzeneHasNoSentinels) {
  const auto values = ComputeAll(ParseSmiles("c1ccccc1"), GetDescriptorSet("all"));
  ASSERT_EQ(values.size(), CatalogueIds().size());
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_FALSE(IsMissing(values[i])) << CatalogueIds()[i];
}

TEST(CatalogueTest, MissingMassOnlyAffectsWeightDescriptors) {
  const auto set = GetDescriptorSet("all");
  const auto values = ComputeAll(ParseSmiles("*c1ccccc1"), set);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& id = set.descriptors[i];
    const bool weight = id == "molecular_weight" || id == "mean_atomic_weight";
    EXPECT_EQ(IsMissing(values[i]), weight) << id;
  }
}

TEST(CatalogueTest, DisconnectedMoleculeYieldsSentinelsNotExceptions) {
  const auto set = GetDescriptorSet("all");
  DescriptorVector values;
  ASSERT_NO_THROW(values = ComputeAll(ParseSmiles("CC.O"), set));
  const auto wiener = std::find(set.descriptors.begin(), set.descriptors.end(), "wiener") - set.descriptors.begin();
  EXPECT_TRUE(IsMissing(values[wiener]));
}

TEST(CatalogueTest, DeterministicAndPermutationInvariant) {
  const auto set = GetDescriptorSet("all");
  std::mt19937 gen(11);
  for (const char* smiles : {"CC(C)Cc1ccc(cc1)C(C)C(=O)O", "c1ccc2c(c1)ccc1ccccc12", "OCC(O)CO",
                             "C1CC2CCC1CC2", "Clc1ccc(Br)cc1N", "C#CC=CC(=O)N"}) {
    SCOPED_TRACE(smiles);
    const auto mol = ParseSmiles(smiles);
    const auto base = ComputeAll(mol, set);
    const auto again = ComputeAll(ParseSmiles(smiles), set);
    ASSERT_EQ(base.size(), again.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (IsMissing(base[i])) {
        EXPECT_TRUE(IsMissing(again[i]));
      } else {
        EXPECT_EQ(std::memcmp(&base[i], &again[i], sizeof(double)), 0) << set.descriptors[i];
      }
    }
    std::vector<int> order(mol.num_atoms());
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), gen);
      const auto permuted = ComputeAll(mol::PermuteAtoms(mol, order), set);
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (IsMissing(base[i])) {
          EXPECT_TRUE(IsMissing(permuted[i])) << set.descriptors[i];
        } else {
          EXPECT_NEAR(permuted[i], base[i], 1e-9 * std::max(1.0, std::abs(base[i]))) << set.descriptors[i];
        }
      }
    }
  }
}

TEST(CatalogueTest, MatrixRowsFollowInputOrderForAnyWorkerCount) {
  std::vector<MolecularGraph> mols;
  for (const auto& s : PahSmiles()) mols.push_back(ParseSmiles(s));
  const auto set = GetDescriptorSet("all");
  const auto serial = ComputeMatrix(mols, set, 1);
  const auto parallel = ComputeMatrix(mols, set, 4);
  EXPECT_EQ(serial.columns, set.descriptors);
  ASSERT_EQ(serial.rows(), static_cast<Eigen::Index>(mols.size()));
  for (Eigen::Index r = 0; r < serial.rows(); ++r) {
    const auto row = ComputeAll(mols[r], set);
    for (Eigen::Index c = 0; c < serial.cols(); ++c) {
      EXPECT_EQ(serial.values(r, c), row[c]);
      EXPECT_EQ(parallel.values(r, c), row[c]);
    }
  }
}

}  // namespace
}  // namespace fastqspr::desc
