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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kgalign/types.hpp"

namespace kgalign::io {

// Embedding file: "KGAV1", u32 rows, u32 dimension, row-major f32, all
// little-endian. One file per (side, view); the view is not stored.
inline constexpr std::string_view kEmbeddingMagic = "KGAV1";
// Similarity file: "KGAS1", u32 rows, u32 cols, row-major f64, little-endian.
inline constexpr std::string_view kSimilarityMagic = "KGAS1";

void write_embedding(const std::filesystem::path& path, const EmbeddingView& view);
EmbeddingView read_embedding(const std::filesystem::path& path, View view);

void write_similarity(const std::filesystem::path& path, const SimilarityMatrix& matrix);
SimilarityMatrix read_similarity(const std::filesystem::path& path);

// One id per line, line number = index. A trailing newline is optional;
// '\r' before '\n' is stripped.
void write_catalog(const std::filesystem::path& path, const EntityCatalog& catalog);
EntityCatalog read_catalog(const std::filesystem::path& path, Side side);

using IdPair = std::pair<std::string, std::string>;

// source_id <TAB> target_id per line.
void write_truth(const std::filesystem::path& path, const std::vector<IdPair>& pairs);
std::vector<IdPair> read_truth(const std::filesystem::path& path);

// source_id, rank, candidate_id, exchange_loss (6 decimals). top_k == 0
// writes every candidate.
void write_ranked(std::ostream& out, const RankedAlignment& ranked, const EntityCatalog& sources,
                  const EntityCatalog& targets, std::size_t top_k = 0);
void write_ranked(const std::filesystem::path& path, const RankedAlignment& ranked,
                  const EntityCatalog& sources, const EntityCatalog& targets, std::size_t top_k = 0);

/// Ranked TSV loaded back in id space. Catalogs are rebuilt in order of
/// first appearance.
struct RankedTable {
  EntityCatalog sources;
  EntityCatalog targets;
  RankedAlignment ranked;
};
RankedTable read_ranked(const std::filesystem::path& path);

}  // namespace kgalign::io
