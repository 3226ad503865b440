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
#include <limits>

#include <gtest/gtest.h>

#include "kgalign/validate.hpp"

namespace kgalign {
namespace {

SideData make_side(Side side, std::size_t count, std::size_t dim) {
  SideData d;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < count; ++i) ids.push_back("e" + std::to_string(i));
  d.catalog = EntityCatalog(side, ids);
  for (View v : kAllViews) d.views[index_of(v)] = EmbeddingView(v, DenseMatrix<float>(count, dim, 0.5f));
  return d;
}

TEST(ValidateDataset, WellFormedPasses) {
  const auto r = validate_dataset(make_side(Side::G1, 4, 768), make_side(Side::G2, 5, 768));
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_EQ(r.summary(), "pass");
}

TEST(ValidateDataset, DimensionMismatch) {
  auto a = make_side(Side::G1, 3, 768);
  auto b = make_side(Side::G2, 3, 768);
  b.views[index_of(View::E)] = EmbeddingView(View::E, DenseMatrix<float>(3, 512, 0.1f));
  const auto r = validate_dataset(a, b);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has("view dimension mismatch"));
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(ValidateDataset, NonFiniteEntry) {
  auto a = make_side(Side::G1, 3, 8);
  DenseMatrix<float> m(3, 8, 0.1f);
  m(1, 2) = std::numeric_limits<float>::quiet_NaN();
  a.views[index_of(View::AR)] = EmbeddingView(View::AR, m);
  const auto r = validate_dataset(a, make_side(Side::G2, 3, 8));
  EXPECT_TRUE(r.has("non-finite entry"));
}

TEST(ValidateDataset, RowCountAndDuplicates) {
  auto a = make_side(Side::G1, 3, 8);
  a.catalog = EntityCatalog(Side::G1, {"x", "y", "x", "z"});
  const auto r = validate_dataset(a, make_side(Side::G2, 3, 8));
  EXPECT_TRUE(r.has("row count mismatch"));
  EXPECT_TRUE(r.has("duplicate id"));
}

TEST(ValidateDataset, AbsentViewsAreFine) {
  auto a = make_side(Side::G1, 3, 8);
  auto b = make_side(Side::G2, 3, 16);
  a.views[index_of(View::ST)].reset();
  b.views = {};
  b.views[index_of(View::ST)] = EmbeddingView(View::ST, DenseMatrix<float>(3, 16, 1.0f));
  EXPECT_TRUE(validate_dataset(a, b).ok());
}

}  // namespace
}  // namespace kgalign
