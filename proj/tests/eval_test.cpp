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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "kgalign/eval.hpp"
#include "testing/oracles.hpp"

namespace kgalign {
namespace {

// Row i lists columns so that column i sits at rank ranks[i].
RankedAlignment with_ranks(const std::vector<std::size_t>& ranks, std::size_t width) {
  RankedAlignment r;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    std::vector<Candidate> row;
    std::size_t filler = 1000;
    for (std::size_t k = 1; k <= width; ++k) {
      row.push_back({k == ranks[i] ? i : filler++, -static_cast<double>(k)});
    }
    r.rows.push_back(row);
  }
  return r;
}

TruthPairs diagonal(std::size_t n) {
  TruthPairs t;
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(i, i);
  return t;
}

TEST(Metrics, PerfectRanking) {
  const auto r = with_ranks({1, 1, 1, 1}, 5);
  EXPECT_EQ(hits_at_n(r, diagonal(4), 1), 1.0);
  EXPECT_EQ(mrr(r, diagonal(4)), 1.0);
}

TEST(Metrics, RanksOneTwoFour) {
  const auto r = with_ranks({1, 2, 4}, 12);
  EXPECT_NEAR(hits_at_n(r, diagonal(3), 1), 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(hits_at_n(r, diagonal(3), 2), 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(hits_at_n(r, diagonal(3), 10), 1.0, 1e-9);
  EXPECT_NEAR(mrr(r, diagonal(3)), 0.583333333333, 1e-9);
}

TEST(Metrics, AbsentTargetCountsAsMiss) {
  RankedAlignment r;
  r.rows = {{{5, 0.0}, {6, -1.0}}};
  EXPECT_EQ(hits_at_n(r, {{0, 9}}, 10), 0.0);
  EXPECT_EQ(mrr(r, {{0, 9}}), 0.0);
}

TEST(Metrics, MissingSourceIsAnError) {
  const auto r = with_ranks({1, 1}, 2);
  try {
    hits_at_n(r, {{0, 0}, {7, 1}, {9, 1}}, 1);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("7 9"), std::string::npos) << e.what();
  }
  EXPECT_THROW(mrr(r, {{3, 0}}), InvalidArgument);
  EXPECT_THROW(hits_at_n(r, diagonal(2), 0), InvalidArgument);
}

TEST(Metrics, Properties) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<std::size_t> ranks(n);
    for (auto& k : ranks) k = 1 + rng() % 30;
    const auto r = with_ranks(ranks, 30);
    const auto t = diagonal(n);
    const double m = mrr(r, t);
    EXPECT_GE(m + 1e-12, hits_at_n(r, t, 1));
    double prev = 0.0;
    for (std::size_t k = 1; k <= 31; ++k) {
      const double h = hits_at_n(r, t, k);
      EXPECT_GE(h, prev);
      EXPECT_LE(m, h + (1.0 / static_cast<double>(k + 1)) * (1.0 - h) + 1e-12);
      prev = h;
    }
    EXPECT_EQ(prev, 1.0);

    // Changing losses without reordering leaves metrics alone.
    auto perturbed = r;
    for (auto& row : perturbed.rows)
      for (std::size_t k = 0; k < row.size(); ++k) row[k].loss = -1e3 * static_cast<double>(k * k);
    EXPECT_EQ(mrr(perturbed, t), m);
    EXPECT_EQ(hits_at_n(perturbed, t, 10), hits_at_n(r, t, 10));
  }
}

TEST(ArgmaxBaseline, PicksRowBest) {
  const auto m = Matrix::from_rows({{0.1, 0.9, 5.0}, {0.8, 0.2, 5.0}});
  EXPECT_EQ(argmax_hits_at_1(m, Objective::Max, 2, {{0, 1}, {1, 0}}), 1.0);
  EXPECT_EQ(argmax_hits_at_1(m, Objective::Min, 2, {{0, 1}, {1, 0}}), 0.0);
}

TEST(ResolveTruth, ListsMissingIds) {
  const EntityCatalog s(Side::G1, {"a", "b"});
  const EntityCatalog t(Side::G2, {"x", "y"});
  EXPECT_EQ(resolve_truth({{"b", "x"}}, s, t), (TruthPairs{{1, 0}}));
  try {
    resolve_truth({{"a", "x"}, {"q", "y"}, {"b", "z"}}, s, t);
    FAIL();
  } catch (const InvalidArgument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("source q"), std::string::npos);
    EXPECT_NE(msg.find("target z"), std::string::npos);
  }
}

TEST(Report, WriteReadRoundTrip) {
  MetricReport r;
  r.label = "run-a";
  r.hits_at_1 = 0.966;
  r.hits_at_10 = 0.99;
  r.mrr = 0.975;
  r.pairs = 10500;
  r.config_hash = "0123456789abcdef";
  r.truth_hash = "fedcba9876543210";
  r.extras = {{"solver", "lapjv"}, {"weights", "1,0.75,0.75,0.15"}};
  std::stringstream io;
  write_report(io, r);
  EXPECT_NE(io.str().find("hits@1: 0.966000\n"), std::string::npos);
  const auto back = read_report(io);
  EXPECT_EQ(back.label, r.label);
  EXPECT_EQ(back.hits_at_1, r.hits_at_1);
  EXPECT_EQ(back.pairs, r.pairs);
  EXPECT_EQ(back.config_hash, r.config_hash);
  EXPECT_EQ(back.truth_hash, r.truth_hash);
  EXPECT_EQ(back.extra("weights"), "1,0.75,0.75,0.15");
}

TEST(CompareRuns, DeltasAgainstBaseline) {
  MetricReport a, b;
  a.label = "a";
  b.label = "b";
  a.truth_hash = b.truth_hash = "t";
  a.pairs = b.pairs = 100;
  a.hits_at_1 = 0.90;
  b.hits_at_1 = 0.95;
  a.mrr = b.mrr = 0.5;
  const auto same = compare_runs({a, a});
  for (const auto& row : same.rows) EXPECT_EQ(row.d_hits_at_1, 0.0);
  const auto table = compare_runs({a, b});
  EXPECT_EQ(table.baseline, "a");
  EXPECT_NEAR(table.rows[1].d_hits_at_1, 0.05, 1e-12);
  EXPECT_EQ(table.rows[1].d_mrr, 0.0);
  std::ostringstream out;
  write_delta_table(out, table);
  EXPECT_NE(out.str().find("+0.050000"), std::string::npos);

  b.truth_hash = "other";
  EXPECT_THROW(compare_runs({a, b}), InvalidArgument);
  EXPECT_THROW(compare_runs({a}, 3), InvalidArgument);
}

TEST(Evaluate, FillsReport) {
  const auto r = with_ranks({1, 2, 4}, 12);
  const auto rep = evaluate(r, diagonal(3));
  EXPECT_EQ(rep.pairs, 3u);
  EXPECT_NEAR(rep.mrr, 0.583333, 1e-6);
  EXPECT_EQ(rep.truth_hash, truth_fingerprint(diagonal(3)));
  EXPECT_NE(rep.truth_hash, truth_fingerprint(TruthPairs{{0, 1}, {1, 0}, {2, 2}}));
}

}  // namespace
}  // namespace kgalign
