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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kgalign/similarity.hpp"
#include "testing/oracles.hpp"

namespace kgalign {
namespace {

EmbeddingView view_of(View v, std::vector<std::vector<float>> rows) {
  return {v, DenseMatrix<float>::from_rows(rows)};
}

TEST(NormalizeRows, Basics) {
  const auto out = normalize_rows(view_of(View::E, {{3, 4}, {0, 0}, {1, 0}}));
  EXPECT_NEAR(out.matrix()(0, 0), 0.6f, 1e-7);
  EXPECT_NEAR(out.matrix()(0, 1), 0.8f, 1e-7);
  EXPECT_EQ(out.matrix()(1, 0), 0.0f);
  EXPECT_EQ(out.matrix()(1, 1), 0.0f);
  EXPECT_FALSE(std::isnan(out.matrix()(1, 0)));
  EXPECT_EQ(out.matrix()(2, 0), 1.0f);
  EXPECT_EQ(out.matrix()(2, 1), 0.0f);
}

TEST(NormalizeRows, UnitNormProperty) {
  std::mt19937_64 rng(1);
  const auto m = testing::random_embedding(50, 768, rng);
  const auto out = normalize_rows({View::ST, m});
  for (std::size_t i = 0; i < out.rows(); ++i) {
    double sq = 0;
    for (float x : out.row(i)) sq += double(x) * x;
    EXPECT_NEAR(std::sqrt(sq), 1.0, 1e-6);
  }
}

TEST(Similarity, OrthonormalSetsGiveIdentity) {
  const auto a = view_of(View::E, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto s = similarity(a, a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(s(i, j), i == j ? 1.0 : 0.0);
  EXPECT_EQ(similarity(view_of(View::E, {{1, 0}}), view_of(View::E, {{0, 1}}))(0, 0), 0.0);
}

TEST(Similarity, MatchesNaiveLoop) {
  std::mt19937_64 rng(7);
  const auto a = normalize_rows({View::E, testing::random_embedding(3, 5, rng)});
  const auto b = normalize_rows({View::E, testing::random_embedding(2, 5, rng)});
  const auto s = similarity(a, b);
  const auto oracle = testing::naive_similarity(a.matrix(), b.matrix());
  ASSERT_EQ(s.rows(), 3u);
  ASSERT_EQ(s.cols(), 2u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(s(i, j), oracle(i, j), 1e-6);
}

TEST(Similarity, WideVectorsAccumulateInDouble) {
  std::mt19937_64 rng(9);
  const auto a = normalize_rows({View::E, testing::random_embedding(20, 768, rng)});
  const auto b = normalize_rows({View::E, testing::random_embedding(30, 768, rng)});
  const auto s = similarity(a, b);
  const auto oracle = testing::naive_similarity(a.matrix(), b.matrix());
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 30; ++j) {
      EXPECT_NEAR(s(i, j), oracle(i, j), 1e-12);
      EXPECT_LE(std::abs(s(i, j)), 1.0 + 1e-6);
    }
}

TEST(Similarity, DimensionMismatchThrows) {
  EXPECT_THROW(similarity(view_of(View::E, {{1, 0}}), view_of(View::E, {{1, 0, 0}})),
               DimensionError);
}

TEST(Fuse, OneHotAndArithmetic) {
  PerView<SimilarityMatrix> sims;
  sims[index_of(View::E)] = SimilarityMatrix{Matrix::from_rows({{0.2}}), View::E};
  sims[index_of(View::ST)] = SimilarityMatrix{Matrix::from_rows({{0.4}}), View::ST};
  EXPECT_NEAR(fuse(sims, {1.0, 0.5, 0, 0})(0, 0), 0.4, 1e-15);
  EXPECT_EQ(fuse(sims, {1.0, 0, 0, 0}).data, sims[0]->data);
}

TEST(Fuse, AbsentViewsIgnoredAndAllAbsentThrows) {
  PerView<SimilarityMatrix> sims;
  EXPECT_THROW(fuse(sims, FusionWeights::defaults()), InvalidArgument);
  sims[index_of(View::AT)] = SimilarityMatrix{Matrix::from_rows({{1.0, -1.0}}), View::AT};
  const auto f = fuse(sims, FusionWeights::defaults());
  EXPECT_DOUBLE_EQ(f(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(f(0, 1), -0.75);
}

TEST(Fuse, ShapeMismatchThrows) {
  PerView<SimilarityMatrix> sims;
  sims[0] = SimilarityMatrix{Matrix(2, 2, 0.0), View::E};
  sims[1] = SimilarityMatrix{Matrix(2, 3, 0.0), View::ST};
  EXPECT_THROW(fuse(sims, FusionWeights::defaults()), DimensionError);
}

TEST(Fuse, LinearInWeightsAndOneHotExact) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    PerView<SimilarityMatrix> sims;
    for (View v : kAllViews) {
      if (rng() % 4 != 0 || v == View::E) sims[index_of(v)] = SimilarityMatrix{testing::random_matrix(6, 9, rng, -1, 1), v};
    }
    const FusionWeights w(1.0, 0.75, 0.75, 0.15);
    const double c = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
    const auto lhs = fuse(sims, w.scaled(c));
    const auto rhs = fuse(sims, w);
    for (std::size_t k = 0; k < lhs.data.values().size(); ++k) {
      EXPECT_NEAR(lhs.data.values()[k], c * rhs.data.values()[k], 1e-12);
    }
    for (View v : kAllViews) {
      if (!sims[index_of(v)]) continue;
      std::array<double, 4> hot{};
      hot[index_of(v)] = 1.0;
      EXPECT_EQ(fuse(sims, {hot[0], hot[1], hot[2], hot[3]}).data, sims[index_of(v)]->data);
    }
  }
}

TEST(AccumulateSimilarity, EqualsFuseOfPerViewMatrices) {
  std::mt19937_64 rng(33);
  PerView<SimilarityMatrix> sims;
  Matrix acc(8, 5, 0.0);
  const auto w = FusionWeights::defaults();
  for (View v : kAllViews) {
    const auto a = normalize_rows({v, testing::random_embedding(8, 16, rng)});
    const auto b = normalize_rows({v, testing::random_embedding(5, 16, rng)});
    sims[index_of(v)] = similarity(a, b);
    accumulate_similarity(acc, a, b, w[v]);
  }
  const auto fused = fuse(sims, w);
  for (std::size_t k = 0; k < acc.values().size(); ++k) {
    EXPECT_NEAR(acc.values()[k], fused.data.values()[k], 1e-12);
  }
}

}  // namespace
}  // namespace kgalign
