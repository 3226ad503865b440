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

#include "kgalign/similarity.hpp"

#include <cmath>

#include <Eigen/Core>

namespace kgalign {
namespace {

using RowMajorD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMajorF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorF> map(const EmbeddingView& v) {
  return {v.matrix().data(), static_cast<Eigen::Index>(v.rows()),
          static_cast<Eigen::Index>(v.dimension())};
}

Eigen::Map<RowMajorD> map(Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

void check_dims(const EmbeddingView& a, const EmbeddingView& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("view " + std::string(to_string(a.view())) + ": dimension " +
                         std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
  }
}

}  // namespace

EmbeddingView normalize_rows(const EmbeddingView& view) {
  DenseMatrix<float> out = view.matrix();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto row = out.row(i);
    double sq = 0.0;
    for (float x : row) sq += static_cast<double>(x) * x;
    if (sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(sq);
    for (float& x : row) x = static_cast<float>(x * inv);
  }
  return {view.view(), std::move(out)};
}

void accumulate_similarity(Matrix& target, const EmbeddingView& side1, const EmbeddingView& side2,
                           double weight) {
  check_dims(side1, side2);
  if (target.rows() != side1.rows() || target.cols() != side2.rows()) {
    throw DimensionError("accumulation target is " + std::to_string(target.rows()) + "x" +
                         std::to_string(target.cols()) + ", views give " +
                         std::to_string(side1.rows()) + "x" + std::to_string(side2.rows()));
  }
  // Widen once; the products then accumulate in double.
  const RowMajorD a = map(side1).cast<double>();
  const RowMajorD b = map(side2).cast<double>();
  auto t = map(target);
  if (weight == 1.0) {
    t.noalias() += a * b.transpose();
  } else {
    t.noalias() += weight * (a * b.transpose());
  }
}

SimilarityMatrix similarity(const EmbeddingView& side1, const EmbeddingView& side2) {
  check_dims(side1, side2);
  SimilarityMatrix out{Matrix(side1.rows(), side2.rows(), 0.0), side1.view()};
  accumulate_similarity(out.data, side1, side2, 1.0);
  return out;
}

SimilarityMatrix fuse(const PerView<SimilarityMatrix>& similarities, const FusionWeights& weights) {
  const SimilarityMatrix* first = nullptr;
  for (const auto& s : similarities) {
    if (s) {
      first = &*s;
      break;
    }
  }
  if (first == nullptr) throw InvalidArgument("fuse: no similarity views present");

  SimilarityMatrix out{Matrix(first->rows(), first->cols(), 0.0), std::nullopt};
  auto dst = out.data.values();
  for (View v : kAllViews) {
    const auto& s = similarities[index_of(v)];
    if (!s) continue;
    if (s->rows() != out.rows() || s->cols() != out.cols()) {
      throw DimensionError("fuse: view " + std::string(to_string(v)) + " has shape " +
                           std::to_string(s->rows()) + "x" + std::to_string(s->cols()));
    }
    const double alpha = weights[v];
    const auto src = s->data.values();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += alpha * src[k];
  }
  return out;
}

}  // namespace kgalign
