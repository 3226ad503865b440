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

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "kgalign/solver.hpp"

namespace kgalign {
namespace {

[[noreturn]] void range_error(const SinkhornConfig& config, const std::string& what) {
  throw SolverError("solve_sinkhorn: " + what + " at temperature " +
                    std::to_string(config.temperature) + "; increase the temperature");
}

// Scaled kernel exp(sign * (A - rowmax) / temperature).
Matrix kernel(const Matrix& a, double sign, const SinkhornConfig& config) {
  const std::size_t n = a.rows();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = a.row(i);
    auto dst = k.row(i);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      dst[j] = sign * src[j] / config.temperature;
      if (!std::isfinite(dst[j])) range_error(config, "exponent overflow");
      peak = std::max(peak, dst[j]);
    }
    for (double& x : dst) x = std::exp(x - peak);
  }
  return k;
}

// Alternating row/column normalization; returns the final max deviation of
// row sums from 1.
double balance(Matrix& k, const SinkhornConfig& config) {
  const std::size_t n = k.rows();
  std::vector<double> col_sum(n);
  double deviation = std::numeric_limits<double>::infinity();
  for (int it = 0; it < config.iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      auto row = k.row(i);
      double sum = 0.0;
      for (double x : row) sum += x;
      if (!(sum > 0.0) || !std::isfinite(sum)) range_error(config, "row " + std::to_string(i) + " underflowed");
      const double inv = 1.0 / sum;
      for (double& x : row) x *= inv;
    }

    std::fill(col_sum.begin(), col_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = k.row(i);
      for (std::size_t j = 0; j < n; ++j) col_sum[j] += row[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(col_sum[j] > 0.0) || !std::isfinite(col_sum[j])) {
        range_error(config, "column " + std::to_string(j) + " underflowed");
      }
      col_sum[j] = 1.0 / col_sum[j];
    }
    deviation = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      auto row = k.row(i);
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] *= col_sum[j];
        sum += row[j];
      }
      deviation = std::max(deviation, std::abs(sum - 1.0));
    }
    if (deviation < config.convergence_tol) break;
  }
  return deviation;
}

struct Entry {
  double value;
  std::size_t row;
  std::size_t col;
};

// Priority: larger value, then smaller row, then smaller column.
struct Lower {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.value != b.value) return a.value < b.value;
    if (a.row != b.row) return a.row > b.row;
    return a.col > b.col;
  }
};

Entry best_open(const Matrix& k, std::size_t row, const std::vector<bool>& taken) {
  Entry e{-1.0, row, 0};
  const auto r = k.row(row);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!taken[j] && r[j] > e.value) e = {r[j], row, j};
  }
  return e;
}

// Repeatedly locks the largest remaining entry. Each row keeps one heap
// entry; a stale entry (column already taken) is refreshed when popped.
std::vector<std::size_t> greedy_decode(const Matrix& k) {
  const std::size_t n = k.rows();
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> row_to_col(n);
  std::priority_queue<Entry, std::vector<Entry>, Lower> heap;
  for (std::size_t i = 0; i < n; ++i) heap.push(best_open(k, i, taken));

  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (taken[top.col]) {
      heap.push(best_open(k, top.row, taken));
      continue;
    }
    taken[top.col] = true;
    row_to_col[top.row] = top.col;
  }
  return row_to_col;
}

}  // namespace

Assignment solve_sinkhorn(const AdjacencyMatrix& a, const SinkhornConfig& config) {
  config.validate();
  const Matrix& m = a.data;
  if (!m.square()) throw DimensionError("solve_sinkhorn: matrix is not square");
  for (double value : m.values()) {
    if (!std::isfinite(value)) throw SolverError("solve_sinkhorn: non-finite matrix entry");
  }

  Assignment out;
  out.objective = a.objective;
  if (m.rows() == 0) return out;

  Matrix k = kernel(m, a.objective == Objective::Max ? 1.0 : -1.0, config);
  balance(k, config);
  out.row_to_col = greedy_decode(k);
  out.objective_value = assignment_value(m, out.row_to_col);
  return out;
}

}  // namespace kgalign
