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

// Scales each row to unit L2 norm. Zero rows stay zero.
EmbeddingView normalize_rows(const EmbeddingView& view);

// result(i, j) = <side1 row i, side2 row j>, accumulated in double.
// Inputs are expected to be normalized already.
SimilarityMatrix similarity(const EmbeddingView& side1, const EmbeddingView& side2);

// target += weight * similarity(side1, side2), without materializing the
// per-view matrix. `target` must be side1.rows() x side2.rows().
void accumulate_similarity(Matrix& target, const EmbeddingView& side1, const EmbeddingView& side2,
                           double weight);

// Weighted elementwise sum over the views present in `similarities`;
// absent views contribute nothing and their weights are ignored.
SimilarityMatrix fuse(const PerView<SimilarityMatrix>& similarities, const FusionWeights& weights);

}  // namespace kgalign
