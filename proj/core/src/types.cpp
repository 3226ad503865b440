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

#include "kgalign/types.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace kgalign {

std::string_view to_string(View view) {
  switch (view) {
    case View::E: return "E";
    case View::ST: return "ST";
    case View::AT: return "AT";
    case View::AR: return "AR";
  }
  return "?";
}

std::optional<View> parse_view(std::string_view text) {
  for (View v : kAllViews) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Objective objective) {
  return objective == Objective::Min ? "min" : "max";
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "min") return Objective::Min;
  if (text == "max") return Objective::Max;
  return std::nullopt;
}

EntityCatalog::EntityCatalog(Side side, std::vector<std::string> ids)
    : side_(side), ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.try_emplace(ids_[i], i);
}

std::optional<std::size_t> EntityCatalog::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> EntityCatalog::duplicates() const {
  std::vector<std::string> out;
  if (index_.size() == ids_.size()) return out;
  std::unordered_set<std::string> reported;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (index_.at(ids_[i]) != i && reported.insert(ids_[i]).second) out.push_back(ids_[i]);
  }
  return out;
}

EmbeddingView::EmbeddingView(View view, DenseMatrix<float> matrix)
    : view_(view), matrix_(std::move(matrix)) {}

bool EmbeddingView::all_finite() const noexcept {
  const auto v = matrix_.values();
  return std::all_of(v.begin(), v.end(), [](float x) { return std::isfinite(x); });
}

FusionWeights FusionWeights::defaults() { return {1.00, 0.75, 0.75, 0.15}; }

FusionWeights::FusionWeights(double e, double st, double at, double ar) : alpha_{e, st, at, ar} {
  bool any_positive = false;
  for (double a : alpha_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw InvalidArgument("fusion weights must be finite and non-negative");
    }
    any_positive = any_positive || a > 0.0;
  }
  if (!any_positive) throw InvalidArgument("at least one fusion weight must be positive");
}

FusionWeights FusionWeights::scaled(double factor) const {
  return {alpha_[0] * factor, alpha_[1] * factor, alpha_[2] * factor, alpha_[3] * factor};
}

AdjacencyMatrix AdjacencyMatrix::from_square(Matrix data, Objective objective) {
  if (!data.square()) throw DimensionError("adjacency matrix must be square");
  AdjacencyMatrix a;
  a.real_rows = data.rows();
  a.real_cols = data.cols();
  a.data = std::move(data);
  a.objective = objective;
  a.sentinel = objective == Objective::Min ? kPadMagnitude : -kPadMagnitude;
  return a;
}

bool Assignment::is_permutation() const {
  std::vector<bool> seen(row_to_col.size(), false);
  for (std::size_t c : row_to_col) {
    if (c >= seen.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

std::vector<std::size_t> Assignment::col_to_row() const {
  std::vector<std::size_t> inv(row_to_col.size());
  for (std::size_t i = 0; i < row_to_col.size(); ++i) inv[row_to_col[i]] = i;
  return inv;
}

double assignment_value(const Matrix& a, std::span<const std::size_t> row_to_col) {
  double total = 0.0;
  for (std::size_t i = 0; i < row_to_col.size(); ++i) total += a(i, row_to_col[i]);
  return total;
}

std::size_t RankedAlignment::rank_of(std::size_t row, std::size_t column) const {
  const auto& list = rows.at(row);
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k].column == column) return k + 1;
  }
  return 0;
}

}  // namespace kgalign
