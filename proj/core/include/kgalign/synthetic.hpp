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
#include <cstdint>
#include <filesystem>
#include <vector>

#include "kgalign/eval.hpp"
#include "kgalign/io.hpp"
#include "kgalign/validate.hpp"

namespace kgalign {

struct SyntheticParams {
  std::uint64_t seed = 0;
  std::size_t m1 = 1000;
  std::size_t m2 = 1000;
  std::size_t dimension = 64;
  // Per-coordinate standard deviation of the Gaussian noise added to the
  // side-2 copy before renormalizing.
  double noise = 0.3;
  // Fraction of min(m1, m2) entities that have a counterpart.
  double overlap = 1.0;
  // false: counterpart of side-1 row k is side-2 row k (k < pair count).
  // true: side-2 rows are randomly permuted.
  bool shuffle = false;
};

struct SyntheticDataset {
  SideData side1;
  SideData side2;
  std::vector<io::IdPair> truth;
  TruthPairs truth_index;
};

/// Random unit vectors on side 1 for every view, noisy renormalized copies
/// on side 2 for matched entities, fresh random vectors for the rest. Each
/// view draws independent noise. Deterministic for a given seed.
SyntheticDataset make_synthetic(const SyntheticParams& params);

// Writes catalogs, the four view files and truth.tsv using DatasetLayout.
void write_dataset(const std::filesystem::path& dir, const SyntheticDataset& dataset);

}  // namespace kgalign
