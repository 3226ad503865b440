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

#include "kgalign/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kgalign/config.hpp"

namespace kgalign {
namespace {

void random_unit(std::span<float> row, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sq = 0.0;
  std::vector<double> tmp(row.size());
  do {
    sq = 0.0;
    for (double& x : tmp) {
      x = gauss(rng);
      sq += x * x;
    }
  } while (sq == 0.0);
  const double inv = 1.0 / std::sqrt(sq);
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = static_cast<float>(tmp[k] * inv);
}

void noisy_copy(std::span<const float> src, std::span<float> dst, double sigma,
                std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, sigma > 0.0 ? sigma : 1.0);
  std::vector<double> tmp(src.size());
  double sq = 0.0;
  for (std::size_t k = 0; k < src.size(); ++k) {
    tmp[k] = src[k] + (sigma > 0.0 ? gauss(rng) : 0.0);
    sq += tmp[k] * tmp[k];
  }
  if (sq == 0.0) {
    random_unit(dst, rng);
    return;
  }
  const double inv = 1.0 / std::sqrt(sq);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] = static_cast<float>(tmp[k] * inv);
}

std::vector<std::string> make_ids(std::string_view prefix, std::size_t count) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back(std::string(prefix) + std::to_string(i));
  return ids;
}

}  // namespace

SyntheticDataset make_synthetic(const SyntheticParams& params) {
  if (params.m1 == 0 || params.m2 == 0 || params.dimension == 0) {
    throw InvalidArgument("make_synthetic: m1, m2 and dimension must be >= 1");
  }
  if (!(params.noise >= 0.0)) throw InvalidArgument("make_synthetic: noise must be >= 0");
  if (!(params.overlap >= 0.0 && params.overlap <= 1.0)) {
    throw InvalidArgument("make_synthetic: overlap must lie in [0, 1]");
  }

  const std::size_t pairs = static_cast<std::size_t>(
      std::floor(params.overlap * static_cast<double>(std::min(params.m1, params.m2))));

  // position[k] = side-2 row holding the k-th side-2 entity.
  std::vector<std::size_t> position(params.m2);
  std::iota(position.begin(), position.end(), 0);
  if (params.shuffle) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                      static_cast<std::uint32_t>(params.seed >> 32), 0u};
    std::mt19937_64 rng(seq);
    std::shuffle(position.begin(), position.end(), rng);
  }

  SyntheticDataset out;
  out.side1.catalog = EntityCatalog(Side::G1, make_ids("g1/e", params.m1));
  out.side2.catalog = EntityCatalog(Side::G2, make_ids("g2/e", params.m2));

  for (View v : kAllViews) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                      static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(index_of(v) + 1)};
    std::mt19937_64 rng(seq);

    DenseMatrix<float> a(params.m1, params.dimension);
    DenseMatrix<float> b(params.m2, params.dimension);
    for (std::size_t i = 0; i < params.m1; ++i) random_unit(a.row(i), rng);
    for (std::size_t k = 0; k < params.m2; ++k) {
      const std::size_t row = position[k];
      if (k < pairs) {
        noisy_copy(a.row(k), b.row(row), params.noise, rng);
      } else {
        random_unit(b.row(row), rng);
      }
    }
    out.side1.views[index_of(v)] = EmbeddingView(v, std::move(a));
    out.side2.views[index_of(v)] = EmbeddingView(v, std::move(b));
  }

  out.truth.reserve(pairs);
  out.truth_index.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    out.truth_index.emplace_back(k, position[k]);
    out.truth.emplace_back(out.side1.catalog.id(k), out.side2.catalog.id(position[k]));
  }
  return out;
}

void write_dataset(const std::filesystem::path& dir, const SyntheticDataset& dataset) {
  std::filesystem::create_directories(dir);
  io::write_catalog(DatasetLayout::source_catalog(dir), dataset.side1.catalog);
  io::write_catalog(DatasetLayout::target_catalog(dir), dataset.side2.catalog);
  for (View v : kAllViews) {
    if (const auto& s = dataset.side1.views[index_of(v)]) {
      io::write_embedding(DatasetLayout::view(dir, Side::G1, v), *s);
    }
    if (const auto& t = dataset.side2.views[index_of(v)]) {
      io::write_embedding(DatasetLayout::view(dir, Side::G2, v), *t);
    }
  }
  io::write_truth(DatasetLayout::truth(dir), dataset.truth);
}

}  // namespace kgalign
