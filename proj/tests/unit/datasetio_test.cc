// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fastqspr/common/missing.h"
#include "fastqspr/common/rng.h"
#include "fastqspr/datasetio/cache.h"
#include "fastqspr/datasetio/checkpoint.h"
#include "fastqspr/datasetio/csv.h"
#include "fastqspr/datasetio/dataset.h"
#include "fastqspr/datasetio/split.h"
#include "fastqspr/molparse/smiles.h"

namespace fastqspr::io {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / (std::string("fastqspr_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void WriteFile(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CsvTest, QuotingAndLineEndings) {
  const auto t = ParseCsv("\xEF\xBB\xBFname,smiles\r\n\"a, \"\"b\"\"\",CCO\r\n\r\n\"multi\nline\",C\n");
  EXPECT_EQ(t.header, (std::vector<std::string>{"name", "smiles"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "a, \"b\"");
  EXPECT_EQ(t.rows[1][0], "multi\nline");
  EXPECT_EQ(t.ColumnIndex("smiles"), 1u);
  EXPECT_THROW(t.ColumnIndex("logp"), IoError);
  EXPECT_THROW(ParseCsv("a,b\n\"open,1\n"), IoError);
  EXPECT_THROW(ParseCsv(""), IoError);
}

TEST(CsvTest, WriterRoundTrip) {
  const std::vector<std::string> fields = {"plain", "has,comma", "has\"quote", "two\nlines", ""};
  const auto t = ParseCsv("h1,h2,h3,h4,h5\n" + CsvLine(fields) + "\n");
  EXPECT_EQ(t.rows[0], fields);
  EXPECT_EQ(FormatDouble(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(FormatDouble(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(FormatDouble(kMissing), "");
}

TEST(LoadDatasetTest, BenzeneExampleRow) {
  const auto table = ParseCsv(
      "compound,smiles,log_p,retention_index,boiling_point_c,acentric_factor\n"
      "Benzene,C1=CC=CC=C1,2.04,979,80,0.21\n");
  const auto result = LoadDataset(
      table, {.smiles_column = "smiles",
              .target_columns = {"log_p", "retention_index", "boiling_point_c", "acentric_factor"}});
  const auto& ds = result.dataset;
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.identifiers, std::vector<std::string>{"Benzene"});
  EXPECT_EQ(ds.targets.cols(), 4);
  EXPECT_DOUBLE_EQ(ds.targets.values(0, 1), 979.0);
  EXPECT_EQ(ds.molecules[0].num_atoms(), 6);
  EXPECT_TRUE(result.report.dropped.empty());
}

TEST(LoadDatasetTest, DropsInvalidRowsAndReportsThem) {
  const auto table = ParseCsv(
      "name,smiles,y\n"
      "ok,CCO,1.5\n"
      "bad,C1CC,2.0\n"
      "blank,CC,\n"
      "text,CCC,abc\n"
      "short,CC\n"
      "salt,[Na+].[Cl-].CCCCO,3\n");
  const auto result = LoadDataset(table, {.target_columns = {"y"}});
  const auto& ds = result.dataset;
  EXPECT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.source_rows, (std::vector<int>{1, 6}));
  EXPECT_EQ(ds.molecules[1].num_atoms(), 5);  // largest fragment kept
  ASSERT_EQ(result.report.dropped.size(), 4u);
  EXPECT_EQ(result.report.dropped[0].row, 2);
  EXPECT_NE(result.report.dropped[0].reason.find("invalid SMILES"), std::string::npos);
  EXPECT_EQ(result.report.dropped[1].row, 3);
  EXPECT_EQ(result.report.input_rows, static_cast<int>(result.report.dropped.size() + ds.size()));

  const auto raw = LoadDataset(table, {.target_columns = {"y"}, .standardize = false});
  EXPECT_EQ(raw.dataset.molecules[1].num_atoms(), 7);
}

TEST(LoadDatasetTest, MultitaskKeepsPartiallyMissingRows) {
  const auto table = ParseCsv("smiles,a,b\nCC,1,\nCCC,,\nCCCC,,4\n");
  const auto result = LoadDataset(table, {.target_columns = {"a", "b"}});
  EXPECT_EQ(result.dataset.size(), 2u);
  EXPECT_TRUE(result.dataset.identifiers.empty());
  EXPECT_TRUE(IsMissing(result.dataset.targets.values(0, 1)));
  EXPECT_EQ(result.report.dropped[0].reason, "all targets are missing");
}

TEST(LoadDatasetTest, Errors) {
  const auto table = ParseCsv("smiles,y\nC1CC,1\n");
  EXPECT_THROW(LoadDataset(table, {.target_columns = {"y"}}), IoError);
  try {
    LoadDataset(table, {.target_columns = {"log_p"}});
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("log_p"), std::string::npos);
  }
  EXPECT_THROW(LoadDataset(table, {.smiles_column = "SMILES", .target_columns = {"y"}}), IoError);
  EXPECT_THROW(LoadDataset(fs::path("/nonexistent/file.csv"), {.target_columns = {"y"}}), IoError);
}

TEST(LoadMoleculesTest, KeepsInvalidRowsFlagged) {
  const auto rows = LoadMolecules(ParseCsv("id,smiles\na,CCO\nb,C1CC\nc,c1ccccc1\n"), "smiles", true);
  ASSERT_EQ(rows.molecules.size(), 3u);
  EXPECT_TRUE(rows.molecules[0].has_value());
  EXPECT_FALSE(rows.molecules[1].has_value());
  EXPECT_FALSE(rows.errors[1].empty());
  EXPECT_EQ(rows.identifiers[2], "c");
}

TEST(SplitTest, PahSizes) {
  const auto s = RandomSplit(55, {0.8, 0.1, 0.1}, 55);
  EXPECT_EQ(s.train.size(), 44u);
  EXPECT_EQ(s.val.size(), 5u);
  EXPECT_EQ(s.test.size(), 6u);
}

TEST(SplitTest, DisjointExhaustiveAndSeeded) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.UniformIndex(300));
    const double train = rng.Uniform(0.34, 0.8);
    const double val = rng.Uniform(0.3, 0.9) * (1 - train);
    const SplitFractions f{train, val, 1.0 - train - val};
    SplitIndices s;
    try {
      s = RandomSplit(n, f, trial);
    } catch (const IoError&) {
      continue;  // some small n leave a part empty
    }
    std::multiset<int> all(s.train.begin(), s.train.end());
    all.insert(s.val.begin(), s.val.end());
    all.insert(s.test.begin(), s.test.end());
    ASSERT_EQ(all.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ASSERT_EQ(all.count(i), 1u);
  }
  EXPECT_EQ(RandomSplit(55, {}, 3).train, RandomSplit(55, {}, 3).train);
  std::set<std::vector<int>> distinct;
  for (int seed = 0; seed < 50; ++seed) distinct.insert(RandomSplit(55, {}, seed).train);
  EXPECT_EQ(distinct.size(), 50u);
}

TEST(SplitTest, Errors) {
  EXPECT_THROW(RandomSplit(55, {0.8, 0.1, 0.2}, 1), IoError);
  EXPECT_THROW(RandomSplit(2, {}, 1), IoError);
  EXPECT_THROW(RandomSplit(5, {}, 1), IoError);  // val floor(0.5) = 0
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    smiles_ = {"CCO", "c1ccccc1", "CC(=O)O", "C1CCCCC1N"};
    for (const auto& s : smiles_) molecules_.push_back(mol::ParseSmiles(s));
  }
  std::vector<std::string> smiles_;
  std::vector<mol::MolecularGraph> molecules_;
};

TEST_F(CacheTest, MissThenBitIdenticalHit) {
  TempDir dir;
  const auto path = CachePathFor(dir.path() / "data.csv");
  EXPECT_EQ(path.filename(), "data.fpcache");
  const auto set = desc::GetDescriptorSet("all");
  const auto first = CachedDescriptors(smiles_, molecules_, set, path, true);
  EXPECT_FALSE(first.hit);
  const auto second = CachedDescriptors(smiles_, molecules_, set, path, true);
  EXPECT_TRUE(second.hit);
  EXPECT_EQ(second.matrix.columns, first.matrix.columns);
  const auto fresh = desc::ComputeMatrix(molecules_, set, 1);
  ASSERT_EQ(second.matrix.values.size(), fresh.values.size());
  EXPECT_EQ(std::memcmp(second.matrix.values.data(), fresh.values.data(), fresh.values.size() * sizeof(double)), 0);
}

TEST_F(CacheTest, StaleKeysRecompute) {
  TempDir dir;
  const auto path = dir.path() / "data.fpcache";
  const auto all = desc::GetDescriptorSet("all");
  CachedDescriptors(smiles_, molecules_, all, path, true);
  auto edited = smiles_;
  edited[2] = "CC(=O)OC";
  auto edited_mols = molecules_;
  edited_mols[2] = mol::ParseSmiles(edited[2]);
  EXPECT_FALSE(CachedDescriptors(edited, edited_mols, all, path, true).hit);
  EXPECT_TRUE(CachedDescriptors(edited, edited_mols, all, path, true).hit);
  EXPECT_FALSE(CachedDescriptors(edited, edited_mols, desc::GetDescriptorSet("core"), path, true).hit);
  EXPECT_FALSE(CachedDescriptors(edited, edited_mols, desc::GetDescriptorSet("core"), path, false).hit);

  // A different catalogue version in the header must not be trusted.
  std::string text = ReadFile(path);
  const std::string version(desc::kCatalogueVersion);
  text.replace(text.find(version), version.size(), "fastqspr-descriptors/0");
  WriteFile(path, text);
  EXPECT_FALSE(CachedDescriptors(edited, edited_mols, desc::GetDescriptorSet("core"), path, false).hit);
}

TEST_F(CacheTest, CorruptFileIsRecomputedNotFatal) {
  TempDir dir;
  const auto path = dir.path() / "data.fpcache";
  const auto set = desc::GetDescriptorSet("core");
  CachedDescriptors(smiles_, molecules_, set, path, true);
  std::string text = ReadFile(path);
  text[text.size() - 3] ^= 0x55;
  WriteFile(path, text);
  const auto again = CachedDescriptors(smiles_, molecules_, set, path, true);
  EXPECT_FALSE(again.hit);
  WriteFile(path, text.substr(0, text.size() / 2));
  EXPECT_FALSE(CachedDescriptors(smiles_, molecules_, set, path, true).hit);
  WriteFile(path, "garbage");
  EXPECT_FALSE(CachedDescriptors(smiles_, molecules_, set, path, true).hit);
  EXPECT_TRUE(CachedDescriptors(smiles_, molecules_, set, path, true).hit);
}

CheckpointFile MakeCheckpoint(std::uint64_t seed) {
  Rng rng(seed);
  CheckpointFile c;
  auto& m = c.model;
  m.spec = {.input_dim = 4, .hidden_layers = 2, .hidden_width = 6, .output_dim = 2};
  m.params = nn::InitNetwork(m.spec, seed);
  m.descriptor_set = "core";
  m.catalogue_version = std::string(desc::kCatalogueVersion);
  m.descriptor_manifest = {"a", "b", "c", "d", "e"};
  m.target_names = {"y1", "y2"};
  m.feature_scaler.kept_columns = {"a", "b", "d", "e"};
  for (int i = 0; i < 4; ++i) {
    m.feature_scaler.means.push_back(rng.Uniform(-5, 5));
    m.feature_scaler.stds.push_back(rng.Uniform(0.1, 3));
  }
  m.feature_scaler.clamp_bound = 3.0;
  m.target_scaler = {{"y1", "y2"}, {0.1 + 1.0 / 3.0, -2.0}, {1.7, 0.3}, std::nullopt, true};
  c.run_config = {{"random_seed", "55"}, {"clamp_input", "True"}};
  c.seed = 57;
  c.repetition = 2;
  return c;
}

TEST(CheckpointTest, RoundTripReproducesPredictionsBitIdentically) {
  TempDir dir;
  const auto original = MakeCheckpoint(9);
  const auto path = CheckpointPath(dir.path(), original.repetition);
  EXPECT_EQ(path.filename(), "checkpoint_2");
  SaveCheckpoint(original, path);
  const auto loaded = LoadCheckpoint(path);
  EXPECT_EQ(loaded, original);

  Rng rng(4);
  LabeledMatrix probe{original.model.descriptor_manifest, Matrix(100, 5)};
  for (Eigen::Index i = 0; i < probe.values.size(); ++i) probe.values.data()[i] = rng.Uniform(-20, 20);
  const Matrix a = nn::Predict(original.model, probe);
  const Matrix b = nn::Predict(loaded.model, probe);
  EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)), 0);
}

TEST(CheckpointTest, VersionMismatchesAndTruncationAreErrors) {
  TempDir dir;
  auto c = MakeCheckpoint(1);
  c.model.catalogue_version = "fastqspr-descriptors/0";
  const auto path = dir.path() / "checkpoint_0";
  SaveCheckpoint(c, path);
  try {
    LoadCheckpoint(path);
    FAIL();
  } catch (const IoError& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("fastqspr-descriptors/0"), std::string::npos);
    EXPECT_NE(message.find(std::string(desc::kCatalogueVersion)), std::string::npos);
  }

  SaveCheckpoint(MakeCheckpoint(1), path);
  std::string text = ReadFile(path);
  WriteFile(path, text.substr(0, text.size() - 10));
  EXPECT_THROW(LoadCheckpoint(path), IoError);

  std::string future = text;
  future.replace(0, future.find('\n'), "fastqspr-checkpoint 2");
  WriteFile(path, future);
  try {
    LoadCheckpoint(path);
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("version 2"), std::string::npos);
  }

  std::string flipped = text;
  flipped[flipped.size() - 1] ^= 0x01;
  WriteFile(path, flipped);
  EXPECT_THROW(LoadCheckpoint(path), IoError);
  EXPECT_THROW(LoadCheckpoint(dir.path() / "missing"), IoError);
}

TEST(CheckpointTest, FindCheckpointsOrdersByIndex) {
  TempDir dir;
  for (int i : {10, 2, 0}) SaveCheckpoint(MakeCheckpoint(i), CheckpointPath(dir.path(), i));
  WriteFile(dir.path() / "report.txt", "x");
  const auto found = FindCheckpoints(dir.path());
  ASSERT_EQ(found.size(), 3u);
  EXPECT_EQ(found[0].filename(), "checkpoint_0");
  EXPECT_EQ(found[2].filename(), "checkpoint_10");
  fs::remove_all(dir.path() / "empty");
  fs::create_directories(dir.path() / "empty");
  EXPECT_TRUE(FindCheckpoints(dir.path() / "empty").empty());
  EXPECT_THROW(FindCheckpoints(dir.path() / "absent"), IoError);
}

}  // namespace
}  // namespace fastqspr::io
