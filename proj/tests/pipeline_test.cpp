// Copyright 2026 The kgalign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "kgalign/io.hpp"
#include "kgalign/matrix_prep.hpp"
#include "kgalign/pipeline.hpp"
#include "kgalign/ranking.hpp"
#include "kgalign/similarity.hpp"
#include "kgalign/synthetic.hpp"
#include "testing/oracles.hpp"

namespace kgalign {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kgalign_pipe_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    SyntheticParams p;
    p.seed = 11;
    p.m1 = 60;
    p.m2 = 50;
    p.dimension = 16;
    p.noise = 0.4;
    data_ = make_synthetic(p);
    write_dataset(dir_ / "data", data_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  AlignConfig config() const {
    AlignConfig c;
    c.use_dataset(dir_ / "data");
    c.ranked_output = dir_ / "ranked.tsv";
    c.report_output = dir_ / "report.txt";
    return c;
  }

  fs::path dir_;
  SyntheticDataset data_;
};

TEST_F(PipelineTest, RunIsDeterministicByteForByte) {
  auto c = config();
  const auto first = run_align(c);
  const auto ranked1 = slurp(c.ranked_output);
  const auto report1 = slurp(c.report_output);
  const auto second = run_align(c);
  EXPECT_EQ(slurp(c.ranked_output), ranked1);
  EXPECT_EQ(slurp(c.report_output), report1);
  EXPECT_EQ(first.assignment.row_to_col, second.assignment.row_to_col);

  const auto report = read_report(c.report_output);
  EXPECT_EQ(report.config_hash, config_hash(c));
  EXPECT_EQ(report.truth_hash, truth_fingerprint(data_.truth));
  EXPECT_EQ(report.pairs, 50u);
  EXPECT_EQ(report.extra("mode"), "views");
  EXPECT_EQ(report.extra("solver"), "lapjv");
  EXPECT_EQ(report.extra("directional"), "true");
  EXPECT_FALSE(report.extra("argmax_hits@1").empty());

  const auto table = io::read_ranked(c.ranked_output);
  EXPECT_EQ(table.ranked.rows.size(), 60u);
  for (const auto& row : table.ranked.rows) EXPECT_EQ(row.size(), 50u);
}

TEST_F(PipelineTest, InMemoryMatchesFileRun) {
  const auto c = config();
  const auto file_run = run_align(c);
  const auto mem = align(data_.side1, data_.side2, AlignOptions{}, &data_.truth_index);
  EXPECT_EQ(mem.assignment.row_to_col, file_run.assignment.row_to_col);
  EXPECT_EQ(mem.report->hits_at_1, file_run.report->hits_at_1);
  EXPECT_EQ(mem.report->mrr, file_run.report->mrr);
}

TEST_F(PipelineTest, PlugInModeMatchesViewMode) {
  const auto fused = fused_similarity(data_.side1, data_.side2, FusionWeights::defaults());
  io::write_similarity(dir_ / "sim.kgas", fused);
  auto c = config();
  const auto views = run_align(c);
  c.similarity_input = dir_ / "sim.kgas";
  const auto plug = run_align(c);
  EXPECT_EQ(plug.assignment.row_to_col, views.assignment.row_to_col);
  EXPECT_EQ(plug.report->hits_at_1, views.report->hits_at_1);
  EXPECT_EQ(read_report(c.report_output).extra("mode"), "similarity-input");

  AlignConfig bare;
  bare.similarity_input = dir_ / "sim.kgas";
  bare.ranked_output = dir_ / "bare.tsv";
  const auto r = run_align(bare);
  EXPECT_EQ(r.sources.id(0), "row0");
  EXPECT_EQ(r.targets.id(49), "col49");
  EXPECT_FALSE(r.report.has_value());
}

TEST_F(PipelineTest, FailuresHappenBeforeOutputs) {
  auto c = config();
  c.truth.clear();
  EXPECT_THROW(run_align(c), InvalidArgument);
  EXPECT_FALSE(fs::exists(c.ranked_output));

  c = config();
  c.target_views[index_of(View::E)] = dir_ / "nope.kgav";
  EXPECT_THROW(run_align(c), Error);
  EXPECT_FALSE(fs::exists(c.ranked_output));

  // Dimension mismatch between the two sides of one view.
  c = config();
  std::mt19937_64 rng(1);
  io::write_embedding(dir_ / "wrong.kgav",
                      EmbeddingView(View::E, testing::random_embedding(50, 8, rng)));
  c.target_views[index_of(View::E)] = dir_ / "wrong.kgav";
  try {
    run_align(c);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("view dimension mismatch"), std::string::npos) << e.what();
  }
  EXPECT_FALSE(fs::exists(c.ranked_output));

  c = config();
  std::ofstream(c.truth) << "g1/e0\tg2/e999\n";
  EXPECT_THROW(run_align(c), InvalidArgument);
  EXPECT_FALSE(fs::exists(c.ranked_output));
}

TEST(Pipeline, FusedSimilarityUsesSharedWeightedViews) {
  std::mt19937_64 rng(2);
  SideData a, b;
  a.catalog = EntityCatalog(Side::G1, {"a0", "a1", "a2"});
  b.catalog = EntityCatalog(Side::G2, {"b0", "b1"});
  const auto ae = testing::random_embedding(3, 4, rng);
  const auto be = testing::random_embedding(2, 4, rng);
  a.views[index_of(View::E)] = EmbeddingView(View::E, ae);
  b.views[index_of(View::E)] = EmbeddingView(View::E, be);
  a.views[index_of(View::AR)] = EmbeddingView(View::AR, testing::random_embedding(3, 5, rng));
  const auto fused = fused_similarity(a, b, FusionWeights(0.5, 1, 1, 1));
  const auto expect = testing::naive_similarity(normalize_rows(EmbeddingView(View::E, ae)).matrix(),
                                                normalize_rows(EmbeddingView(View::E, be)).matrix());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(fused(i, j), 0.5 * expect(i, j), 1e-12);
  EXPECT_THROW(fused_similarity(a, b, FusionWeights(0, 1, 1, 1)), InvalidArgument);
}

TEST(Pipeline, GlobalAssignmentBeatsRowArgmax) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SyntheticParams p;
    p.seed = seed;
    p.m1 = p.m2 = 150;
    p.dimension = 16;
    p.noise = 0.5;
    const auto d = make_synthetic(p);
    for (const bool directional : {true, false}) {
      AlignOptions o;
      o.directional = directional;
      const auto r = align(d.side1, d.side2, o, &d.truth_index);
      EXPECT_GE(r.report->hits_at_1, std::stod(r.report->extra("argmax_hits@1")));
    }
  }
}

TEST(Pipeline, SinkhornAndMinObjective) {
  SyntheticParams p;
  p.seed = 9;
  p.m1 = p.m2 = 80;
  p.dimension = 16;
  p.noise = 0.2;
  const auto d = make_synthetic(p);
  AlignOptions jv;
  const auto ref = align(d.side1, d.side2, jv, &d.truth_index);

  AlignOptions sk;
  sk.solver = SolverKind::Sinkhorn;
  sk.sinkhorn.temperature = 0.02;
  sk.sinkhorn.iterations = 500;
  const auto soft = align(d.side1, d.side2, sk, &d.truth_index);
  EXPECT_TRUE(soft.assignment.is_permutation());
  EXPECT_GE(soft.report->hits_at_1, ref.report->hits_at_1 - 0.05);

  auto sim = fused_similarity(d.side1, d.side2, FusionWeights::defaults());
  for (auto& x : sim.data.values()) x = -x;
  AlignOptions mn;
  mn.objective = Objective::Min;
  const auto flipped = align_similarity(std::move(sim), mn, &d.truth_index);
  EXPECT_EQ(flipped.assignment.row_to_col, ref.assignment.row_to_col);
  EXPECT_EQ(flipped.report->hits_at_1, ref.report->hits_at_1);
  EXPECT_EQ(flipped.report->mrr, ref.report->mrr);
}

}  // namespace
}  // namespace kgalign
