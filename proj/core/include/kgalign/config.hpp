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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "kgalign/solver.hpp"
#include "kgalign/types.hpp"

namespace kgalign {

/// Knobs of the alignment computation itself. Defaults: weights
/// 1.00/0.75/0.75/0.15, maximize, Jonker-Volgenant, transpose augmentation on.
struct AlignOptions {
  FusionWeights weights = FusionWeights::defaults();
  Objective objective = Objective::Max;
  SolverKind solver = SolverKind::Lapjv;
  bool directional = true;
  SinkhornConfig sinkhorn;
};

/// File layout written by `kgalign synth` and understood by `dataset`.
struct DatasetLayout {
  static std::filesystem::path source_catalog(const std::filesystem::path& dir);
  static std::filesystem::path target_catalog(const std::filesystem::path& dir);
  static std::filesystem::path view(const std::filesystem::path& dir, Side side, View view);
  static std::filesystem::path truth(const std::filesystem::path& dir);
};

struct AlignConfig {
  std::filesystem::path source_catalog;
  std::filesystem::path target_catalog;
  // Empty path = view absent.
  std::array<std::filesystem::path, 4> source_views;
  std::array<std::filesystem::path, 4> target_views;
  // Plug-in mode: align a precomputed similarity matrix instead of views.
  std::filesystem::path similarity_input;
  std::filesystem::path truth;

  std::filesystem::path ranked_output;
  std::filesystem::path report_output;
  std::size_t top_k = 0;  // 0 writes full candidate lists

  AlignOptions options;

  // Fills catalogs, views and truth from a DatasetLayout directory; only
  // files that exist are used for views and truth.
  void use_dataset(const std::filesystem::path& dir);
};

// JSON config file. Relative paths resolve against the file's directory.
AlignConfig load_config(const std::filesystem::path& path);
std::string to_json(const AlignConfig& config);

// Hash over every field that can change the produced artifacts (inputs,
// options, top_k); output paths are excluded. 16 hex digits.
std::string config_hash(const AlignConfig& config);

}  // namespace kgalign
