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

#include "kgalign/ranking.hpp"

#include <algorithm>

namespace kgalign {
namespace {

void check_assignment(std::size_t n, const Assignment& assignment) {
  if (assignment.size() != n || !assignment.is_permutation()) {
    throw InvalidArgument("assignment is not a permutation of 0.." + std::to_string(n) + "-1");
  }
}

void sort_candidates(std::vector<Candidate>& list, Objective objective) {
  if (objective == Objective::Max) {
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
      return a.loss != b.loss ? a.loss > b.loss : a.column < b.column;
    });
  } else {
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
      return a.loss != b.loss ? a.loss < b.loss : a.column < b.column;
    });
  }
}

}  // namespace

AdjacencyMatrix rearrange(const AdjacencyMatrix& a, const Assignment& assignment) {
  const std::size_t n = a.n();
  check_assignment(n, assignment);
  AdjacencyMatrix out = a;
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = a.data.row(i);
    auto dst = out.data.row(i);
    for (std::size_t j = 0; j < n; ++j) dst[j] = src[assignment.row_to_col[j]];
  }
  return out;
}

Matrix exchange_matrix(const Matrix& rearranged) {
  if (!rearranged.square()) throw DimensionError("exchange_matrix needs a square matrix");
  const std::size_t n = rearranged.rows();
  Matrix out(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double si = rearranged(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = (rearranged(i, j) + rearranged(j, i)) - (si + rearranged(j, j));
    }
  }
  return out;
}

RankedAlignment rank_rows(const Matrix& losses, Objective objective, std::size_t real_rows,
                          std::size_t real_cols, const Assignment& assignment) {
  const std::size_t n = losses.rows();
  if (!losses.square()) throw DimensionError("rank_rows needs a square loss matrix");
  check_assignment(n, assignment);
  if (real_rows > n || real_cols > n) throw DimensionError("real block larger than the matrix");

  RankedAlignment out;
  out.objective = objective;
  out.rows.resize(real_rows);
  for (std::size_t i = 0; i < real_rows; ++i) {
    auto& list = out.rows[i];
    list.reserve(real_cols);
    const auto row = losses.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t column = assignment.row_to_col[j];
      if (column < real_cols) list.push_back({column, row[j]});
    }
    sort_candidates(list, objective);
  }
  return out;
}

RankedAlignment rank_alignment(const AdjacencyMatrix& a, const Assignment& assignment) {
  const std::size_t n = a.n();
  check_assignment(n, assignment);
  const auto& p = assignment.row_to_col;
  const Matrix& m = a.data;

  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = m(i, p[i]);

  RankedAlignment out;
  out.objective = a.objective;
  out.rows.resize(a.real_rows);
  for (std::size_t i = 0; i < a.real_rows; ++i) {
    auto& list = out.rows[i];
    list.reserve(a.real_cols);
    const auto row = m.row(i);
    const std::size_t partner = p[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t column = p[j];
      if (column >= a.real_cols) continue;
      // Same expression as exchange_matrix on the rearranged matrix.
      list.push_back({column, (row[column] + m(j, partner)) - (s[i] + s[j])});
    }
    sort_candidates(list, a.objective);
  }
  return out;
}

}  // namespace kgalign
