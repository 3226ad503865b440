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

#include "kgalign/types.hpp"

namespace kgalign {

// Sentinel for padded cells: +1e6 when minimizing, -1e6 when maximizing.
constexpr double padding_sentinel(Objective objective) noexcept {
  return objective == Objective::Min ? kPadMagnitude : -kPadMagnitude;
}

// Pads the shorter dimension up to n = max(rows, cols). The real block is
// kept bit-exact.
AdjacencyMatrix pad_to_square(SimilarityMatrix similarity, Objective objective);

// A = S + S^T, computed in place. Every cell that summed a padded entry is
// reset to the sentinel afterwards, so such cells keep magnitude 1e6 and
// the result stays exactly symmetric. For a non-square input this includes
// real cells (i, j) with m1 <= j < m2 (or m2 <= i < m1).
AdjacencyMatrix add_directional(AdjacencyMatrix padded);

}  // namespace kgalign
