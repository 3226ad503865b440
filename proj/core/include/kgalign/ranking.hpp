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

#pragma once

#include <cstddef>
#include <span>

#include "kgalign/types.hpp"

namespace kgalign {

// Permutes columns so every row's assigned partner lands on the diagonal:
// out(i, j) = A(i, assignment.row_to_col[j]).
AdjacencyMatrix rearrange(const AdjacencyMatrix& a, const Assignment& assignment);

// out(i, j) = (Ab(i, j) + Ab(j, i)) - (s_i + s_j) with s = diag(Ab): the
// change in total score if rows i and j swapped partners. Symmetric with a
// zero diagonal.
Matrix exchange_matrix(const Matrix& rearranged);
inline Matrix exchange_matrix(const AdjacencyMatrix& rearranged) {
  return exchange_matrix(rearranged.data);
}

/// Sorts each real row of the exchange-loss matrix into a candidate list.
/// Candidate j of row i stands for side-2 column assignment.row_to_col[j];
/// padded columns are dropped. Max objective sorts losses descending, min
/// ascending; ties go to the smaller side-2 column.
RankedAlignment rank_rows(const Matrix& losses, Objective objective, std::size_t real_rows,
                          std::size_t real_cols, const Assignment& assignment);

/// rearrange + exchange_matrix + rank_rows fused row by row, so the n x n
/// loss matrix is never stored. Produces exactly the same losses and order.
RankedAlignment rank_alignment(const AdjacencyMatrix& a, const Assignment& assignment);

}  // namespace kgalign
