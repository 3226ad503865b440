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

#include <optional>

#include "kgalign/config.hpp"
#include "kgalign/eval.hpp"
#include "kgalign/validate.hpp"

namespace kgalign {

struct StageTimings {
  double load = 0.0;
  double similarity = 0.0;
  double prepare = 0.0;
  double solve = 0.0;
  double rank = 0.0;
  double evaluate = 0.0;

  double total() const noexcept { return load + similarity + prepare + solve + rank + evaluate; }
};

struct AlignResult {
  EntityCatalog sources;
  EntityCatalog targets;
  Assignment assignment;
  RankedAlignment ranked;
  std::optional<MetricReport> report;  // present when truth was supplied
  StageTimings timings;
};

// Normalize every present view, then accumulate the weighted similarity of
// each view present on both sides. Views with zero weight are skipped.
SimilarityMatrix fused_similarity(const SideData& side1, const SideData& side2,
                                  const FusionWeights& weights);

// pad_to_square, then add_directional when enabled.
AdjacencyMatrix prepare_adjacency(SimilarityMatrix fused, const AlignOptions& options);

/// fuse -> pad -> directional -> solve -> rank -> metrics over in-memory
/// data. The report additionally carries "argmax_hits@1", the per-row
/// argmax baseline on the same adjacency matrix.
AlignResult align(const SideData& side1, const SideData& side2, const AlignOptions& options,
                  const TruthPairs* truth = nullptr);

// Plug-in mode: same stages starting from an external similarity matrix.
AlignResult align_similarity(SimilarityMatrix similarity, const AlignOptions& options,
                             const TruthPairs* truth = nullptr);

/// Loads and validates every input before any computation, runs the
/// alignment, writes the ranked TSV and report when paths are configured.
/// The report echoes the configuration and its hash.
AlignResult run_align(const AlignConfig& config);

}  // namespace kgalign
