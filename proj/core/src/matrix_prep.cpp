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

#include "kgalign/matrix_prep.hpp"

#include <algorithm>

namespace kgalign {

AdjacencyMatrix pad_to_square(SimilarityMatrix similarity, Objective objective) {
  const std::size_t m1 = similarity.rows();
  const std::size_t m2 = similarity.cols();
  if (m1 == 0 || m2 == 0) throw DimensionError("cannot pad an empty similarity matrix");

  AdjacencyMatrix out;
  out.real_rows = m1;
  out.real_cols = m2;
  out.objective = objective;
  out.sentinel = padding_sentinel(objective);

  if (m1 == m2) {
    out.data = std::move(similarity.data);
    return out;
  }
  const std::size_t n = std::max(m1, m2);
  out.data = Matrix(n, n, out.sentinel);
  for (std::size_t i = 0; i < m1; ++i) {
    std::copy_n(similarity.data.row(i).begin(), m2, out.data.row(i).begin());
  }
  return out;
}

AdjacencyMatrix add_directional(AdjacencyMatrix padded) {
  Matrix& a = padded.data;
  if (!a.square()) throw DimensionError("add_directional needs a square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) += a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sum = a(i, j) + a(j, i);
      a(i, j) = sum;
      a(j, i) = sum;
    }
  }
  padded.directional = true;
  if (padded.real_rows != n || padded.real_cols != n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (padded.is_sentinel_cell(i, j)) a(i, j) = padded.sentinel;
      }
    }
  }
  return padded;
}

}  // namespace kgalign
