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

// Reference implementations used only by tests. None of these call into the
// code paths they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "kgalign/types.hpp"

namespace kgalign::testing {

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                            double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(rows, cols);
  for (double& x : m.values()) x = dist(rng);
  return m;
}

inline DenseMatrix<float> random_embedding(std::size_t rows, std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<float> dist(0.0f, 1.0f);
  DenseMatrix<float> m(rows, dim);
  for (float& x : m.values()) x = dist(rng);
  return m;
}

struct Enumerated {
  double best = 0.0;
  std::vector<std::size_t> perm;  // lexicographically first optimum
  std::size_t optimal_count = 0;  // permutations within `tie_tol` of best
};

// Walks every permutation with a hand-rolled Heap's algorithm and sums in
// row order.
inline Enumerated enumerate_assignments(const Matrix& a, Objective objective,
                                        double tie_tol = 1e-12) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<double, std::vector<std::size_t>>> all;
  auto record = [&] {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += a(i, p[i]);
    all.emplace_back(v, p);
  };
  std::vector<std::size_t> c(n, 0);
  record();
  std::size_t i = 1;
  while (i < n) {
    if (c[i] < i) {
      std::swap(p[i % 2 == 0 ? 0 : c[i]], p[i]);
      record();
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  Enumerated out;
  const bool maximize = objective == Objective::Max;
  out.best = maximize ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
  for (const auto& [v, perm] : all) out.best = maximize ? std::max(out.best, v) : std::min(out.best, v);
  for (const auto& [v, perm] : all) {
    if (std::abs(v - out.best) <= tie_tol) {
      ++out.optimal_count;
      if (out.perm.empty() || perm < out.perm) out.perm = perm;
    }
  }
  return out;
}

// O(n^3) Hungarian method with potentials; minimum cost only.
inline double hungarian_min_cost(const Matrix& a) {
  const std::size_t n = a.rows();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += a(p[j] - 1, j - 1);
  return total;
}

// Ranks every real row by recomputing each pairwise swap delta straight
// from A: moving row i to j's partner and j to i's partner.
inline RankedAlignment swap_delta_ranking(const Matrix& a, std::size_t real_rows,
                                          std::size_t real_cols,
                                          const std::vector<std::size_t>& partner,
                                          Objective objective) {
  RankedAlignment out;
  out.objective = objective;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < real_rows; ++i) {
    std::vector<Candidate> list;
    for (std::size_t j = 0; j < n; ++j) {
      if (partner[j] >= real_cols) continue;
      const double swapped = a(i, partner[j]) + a(j, partner[i]);
      const double kept = a(i, partner[i]) + a(j, partner[j]);
      list.push_back({partner[j], swapped - kept});
    }
    std::stable_sort(list.begin(), list.end(), [&](const Candidate& x, const Candidate& y) {
      if (x.loss == y.loss) return x.column < y.column;
      return objective == Objective::Max ? x.loss > y.loss : x.loss < y.loss;
    });
    out.rows.push_back(std::move(list));
  }
  return out;
}

// Double-loop dot products of two embedding matrices.
inline Matrix naive_similarity(const DenseMatrix<float>& a, const DenseMatrix<float>& b) {
  Matrix out(a.rows(), b.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += static_cast<double>(a(i, k)) * b(j, k);
      out(i, j) = s;
    }
  }
  return out;
}

// Random matrix with a planted permutation whose entries beat every other
// entry in their row and column by at least `margin`.
inline Matrix planted_matrix(std::size_t n, double margin, std::mt19937_64& rng,
                             std::vector<std::size_t>* planted = nullptr) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> off(0.0, 1.0);
  std::uniform_real_distribution<double> extra(0.0, 0.5);
  Matrix m(n, n);
  for (double& x : m.values()) x = off(rng);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1.0 + margin + extra(rng);
  if (planted) *planted = perm;
  return m;
}

}  // namespace kgalign::testing
