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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgalign/error.hpp"

namespace kgalign {

enum class Side { G1, G2 };

// Information channels per entity: name, neighbor names, attribute values,
// attribute property names.
enum class View : std::uint8_t { E = 0, ST = 1, AT = 2, AR = 3 };

inline constexpr std::array<View, 4> kAllViews{View::E, View::ST, View::AT, View::AR};

std::string_view to_string(View view);
std::optional<View> parse_view(std::string_view text);

enum class Objective { Min, Max };

std::string_view to_string(Objective objective);
std::optional<Objective> parse_objective(std::string_view text);

// Indexed by View; absent views are std::nullopt.
template <class T>
using PerView = std::array<std::optional<T>, 4>;

inline constexpr std::size_t index_of(View view) { return static_cast<std::size_t>(view); }

/// Dense row-major matrix with contiguous storage.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data size does not match " + std::to_string(rows_) + "x" +
                           std::to_string(cols_));
    }
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }
  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;

/// Entity ids of one graph side. Index i is the line number in the catalog
/// file; ids are opaque strings.
class EntityCatalog {
 public:
  EntityCatalog() = default;
  EntityCatalog(Side side, std::vector<std::string> ids);

  Side side() const noexcept { return side_; }
  std::size_t count() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t index) const { return ids_.at(index); }

  // First index carrying `id`, if any.
  std::optional<std::size_t> index_of(std::string_view id) const;

  // Ids that occur more than once, in order of their second occurrence.
  std::vector<std::string> duplicates() const;

 private:
  Side side_ = Side::G1;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One view's embedding matrix for one side: row k is entity k.
/// Entities without content for the view carry an all-zero row.
class EmbeddingView {
 public:
  EmbeddingView() = default;
  EmbeddingView(View view, DenseMatrix<float> matrix);

  View view() const noexcept { return view_; }
  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t dimension() const noexcept { return matrix_.cols(); }
  const DenseMatrix<float>& matrix() const noexcept { return matrix_; }
  std::span<const float> row(std::size_t i) const noexcept { return matrix_.row(i); }

  bool all_finite() const noexcept;

  friend bool operator==(const EmbeddingView&, const EmbeddingView&) = default;

 private:
  View view_ = View::E;
  DenseMatrix<float> matrix_;
};

/// Pairwise scores between side-1 entities (rows) and side-2 entities
/// (columns).
struct SimilarityMatrix {
  Matrix data;
  std::optional<View> view_tag;

  std::size_t rows() const noexcept { return data.rows(); }
  std::size_t cols() const noexcept { return data.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data(i, j); }

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;
};

/// Non-negative per-view weights; at least one must be positive.
class FusionWeights {
 public:
  // 1.00, 0.75, 0.75, 0.15 for E, ST, AT, AR.
  static FusionWeights defaults();

  FusionWeights(double e, double st, double at, double ar);

  double operator[](View view) const noexcept { return alpha_[index_of(view)]; }
  const std::array<double, 4>& values() const noexcept { return alpha_; }

  FusionWeights scaled(double factor) const;

  friend bool operator==(const FusionWeights&, const FusionWeights&) = default;

 private:
  std::array<double, 4> alpha_{};
};

// Finite stand-in for +/- infinity in padded cells.
inline constexpr double kPadMagnitude = 1e6;

/// Square score matrix handed to the assignment solvers. Rows beyond
/// real_rows and columns beyond real_cols are padding filled with `sentinel`.
struct AdjacencyMatrix {
  Matrix data;
  std::size_t real_rows = 0;
  std::size_t real_cols = 0;
  Objective objective = Objective::Max;
  double sentinel = -kPadMagnitude;
  bool directional = false;

  std::size_t n() const noexcept { return data.rows(); }
  bool is_padding(std::size_t i, std::size_t j) const noexcept {
    return i >= real_rows || j >= real_cols;
  }
  // Cells holding the sentinel: padding, plus its mirror image once the
  // transpose has been added.
  bool is_sentinel_cell(std::size_t i, std::size_t j) const noexcept {
    return is_padding(i, j) || (directional && is_padding(j, i));
  }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data(i, j); }

  // Wraps an arbitrary square matrix with no padding.
  static AdjacencyMatrix from_square(Matrix data, Objective objective);
};

/// A bijection rows -> columns over the padded index range.
struct Assignment {
  std::vector<std::size_t> row_to_col;
  double objective_value = 0.0;
  Objective objective = Objective::Max;

  std::size_t size() const noexcept { return row_to_col.size(); }
  bool is_permutation() const;
  // Inverse permutation; requires is_permutation().
  std::vector<std::size_t> col_to_row() const;
};

// Sum of A[i][perm[i]] accumulated in row order.
double assignment_value(const Matrix& a, std::span<const std::size_t> row_to_col);

struct Candidate {
  std::size_t column = 0;  // side-2 index
  double loss = 0.0;       // exchange loss relative to the preliminary assignment

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Per real side-1 row, every real side-2 column ordered best first.
struct RankedAlignment {
  std::vector<std::vector<Candidate>> rows;
  Objective objective = Objective::Max;

  std::size_t size() const noexcept { return rows.size(); }
  // 1-based rank of `column` in row `row`, or 0 when absent.
  std::size_t rank_of(std::size_t row, std::size_t column) const;
};

}  // namespace kgalign
