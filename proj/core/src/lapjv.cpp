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

#include <cmath>
#include <limits>
#include <vector>

#include "kgalign/solver.hpp"

// Dense Jonker-Volgenant (1987). Internally always minimizes
// cost(i, j) = sign * A(i, j); x = row -> column, y = column -> row,
// v = column duals. Row duals are implicit: u_i = cost(i, x_i) - v[x_i].

namespace kgalign {
namespace {

constexpr double kEps = 1e-12;
constexpr std::ptrdiff_t kNone = -1;

class Costs {
 public:
  Costs(const Matrix& a, double sign) : a_(a), sign_(sign) {}
  double operator()(std::size_t i, std::size_t j) const noexcept { return sign_ * a_(i, j); }
  const double* row(std::size_t i) const noexcept { return a_.data() + i * a_.cols(); }
  double sign() const noexcept { return sign_; }

 private:
  const Matrix& a_;
  double sign_;
};

struct State {
  explicit State(std::size_t n) : x(n, kNone), y(n, kNone), v(n, 0.0) {}
  std::vector<std::ptrdiff_t> x;
  std::vector<std::ptrdiff_t> y;
  std::vector<double> v;
};

// Column reduction followed by reduction transfer. Returns the free rows.
std::vector<std::size_t> column_reduction(const Costs& c, State& s) {
  const std::size_t n = s.v.size();
  std::vector<std::size_t> matches(n, 0);

  // Reverse column order, as in the original code.
  for (std::size_t jj = n; jj-- > 0;) {
    std::size_t imin = 0;
    double best = c(0, jj);
    for (std::size_t i = 1; i < n; ++i) {
      const double h = c(i, jj);
      if (h < best) {
        best = h;
        imin = i;
      }
    }
    s.v[jj] = best;
    if (++matches[imin] == 1) {
      s.x[imin] = static_cast<std::ptrdiff_t>(jj);
      s.y[jj] = static_cast<std::ptrdiff_t>(imin);
    } else if (s.v[jj] < s.v[static_cast<std::size_t>(s.x[imin])]) {
      const auto j1 = static_cast<std::size_t>(s.x[imin]);
      s.x[imin] = static_cast<std::ptrdiff_t>(jj);
      s.y[jj] = static_cast<std::ptrdiff_t>(imin);
      s.y[j1] = kNone;
    } else {
      s.y[jj] = kNone;
    }
  }

  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (matches[i] == 0) {
      free_rows.push_back(i);
    } else if (matches[i] == 1 && n > 1) {
      // Transfer: lower v[x_i] until the second-best column ties with it.
      const auto j1 = static_cast<std::size_t>(s.x[i]);
      const double* row = c.row(i);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == j1) continue;
        const double h = c.sign() * row[j] - s.v[j];
        if (h < best) best = h;
      }
      s.v[j1] -= best;
    }
  }
  return free_rows;
}

// One pass of augmenting row reduction over `free_rows`. Rows displaced
// without a strict improvement are returned for the next pass.
std::vector<std::size_t> augmenting_row_reduction(const Costs& c, State& s,
                                                  std::vector<std::size_t> free_rows) {
  const std::size_t n = s.v.size();
  std::vector<std::size_t> next;
  // Bounds the number of strict re-insertions; float noise can otherwise
  // keep two rows trading a column by vanishing amounts.
  std::size_t budget = 8 * n + 64;
  std::size_t k = 0;
  while (k < free_rows.size()) {
    if (budget-- == 0) {
      next.insert(next.end(), free_rows.begin() + static_cast<std::ptrdiff_t>(k), free_rows.end());
      break;
    }
    const std::size_t i = free_rows[k++];
    const double* row = c.row(i);

    double umin = c.sign() * row[0] - s.v[0];
    double usub = std::numeric_limits<double>::infinity();
    std::size_t j1 = 0;
    std::size_t j2 = 0;
    for (std::size_t j = 1; j < n; ++j) {
      const double h = c.sign() * row[j] - s.v[j];
      if (h < usub) {
        if (h >= umin) {
          usub = h;
          j2 = j;
        } else {
          usub = umin;
          umin = h;
          j2 = j1;
          j1 = j;
        }
      }
    }

    std::ptrdiff_t i0 = s.y[j1];
    const bool strict = n > 1 && umin < usub - kEps;
    if (strict) {
      s.v[j1] -= usub - umin;
    } else if (i0 != kNone && n > 1) {
      j1 = j2;
      i0 = s.y[j1];
    }
    s.x[i] = static_cast<std::ptrdiff_t>(j1);
    s.y[j1] = static_cast<std::ptrdiff_t>(i);
    if (i0 != kNone) {
      s.x[static_cast<std::size_t>(i0)] = kNone;
      if (strict) {
        free_rows[--k] = static_cast<std::size_t>(i0);
      } else {
        next.push_back(static_cast<std::size_t>(i0));
      }
    }
  }
  return next;
}

// Dijkstra-style shortest augmenting path from `free_row`, then augment.
void augment(const Costs& c, State& s, std::size_t free_row, std::vector<double>& d,
             std::vector<std::size_t>& pred, std::vector<std::size_t>& cols) {
  const std::size_t n = s.v.size();
  const double* frow = c.row(free_row);
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = c.sign() * frow[j] - s.v[j];
    pred[j] = free_row;
    cols[j] = j;
  }

  // cols[0, low): scanned; cols[low, up): at the current minimum, to scan;
  // cols[up, n): not yet reached.
  std::size_t low = 0;
  std::size_t up = 0;
  std::size_t last = 0;
  double min = 0.0;
  std::size_t end_of_path = 0;
  bool found = false;

  while (!found) {
    if (up == low) {
      last = low;
      min = d[cols[up++]];
      for (std::size_t k = up; k < n; ++k) {
        const std::size_t j = cols[k];
        const double h = d[j];
        if (h <= min) {
          if (h < min) {
            up = low;
            min = h;
          }
          cols[k] = cols[up];
          cols[up++] = j;
        }
      }
      for (std::size_t k = low; k < up; ++k) {
        if (s.y[cols[k]] == kNone) {
          end_of_path = cols[k];
          found = true;
          break;
        }
      }
    }
    if (found) break;

    const std::size_t j1 = cols[low++];
    const auto i = static_cast<std::size_t>(s.y[j1]);
    const double* row = c.row(i);
    const double h = c.sign() * row[j1] - s.v[j1] - min;
    for (std::size_t k = up; k < n; ++k) {
      const std::size_t j = cols[k];
      const double reduced = c.sign() * row[j] - s.v[j] - h;
      if (reduced < d[j]) {
        pred[j] = i;
        if (reduced == min) {
          if (s.y[j] == kNone) {
            end_of_path = j;
            found = true;
            break;
          }
          cols[k] = cols[up];
          cols[up++] = j;
        }
        d[j] = reduced;
      }
    }
  }

  // Update duals of the columns scanned before the last minimum step.
  for (std::size_t k = 0; k < last; ++k) {
    const std::size_t j = cols[k];
    s.v[j] += d[j] - min;
  }

  while (true) {
    const std::size_t i = pred[end_of_path];
    s.y[end_of_path] = static_cast<std::ptrdiff_t>(i);
    const std::ptrdiff_t previous = s.x[i];
    s.x[i] = static_cast<std::ptrdiff_t>(end_of_path);
    if (i == free_row) break;
    end_of_path = static_cast<std::size_t>(previous);
  }
}

}  // namespace

Assignment solve_lapjv(const AdjacencyMatrix& a) {
  const Matrix& m = a.data;
  if (!m.square()) throw DimensionError("solve_lapjv: matrix is not square");
  for (double value : m.values()) {
    if (!std::isfinite(value)) throw SolverError("solve_lapjv: non-finite matrix entry");
  }

  Assignment out;
  out.objective = a.objective;
  const std::size_t n = m.rows();
  if (n == 0) return out;

  const Costs costs(m, a.objective == Objective::Max ? -1.0 : 1.0);
  State state(n);

  auto free_rows = column_reduction(costs, state);
  for (int pass = 0; pass < 2 && !free_rows.empty(); ++pass) {
    free_rows = augmenting_row_reduction(costs, state, std::move(free_rows));
  }

  std::vector<double> d(n);
  std::vector<std::size_t> pred(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t row : free_rows) augment(costs, state, row, d, pred, cols);

  out.row_to_col.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (state.x[i] == kNone) throw SolverError("solve_lapjv: row left unassigned");
    out.row_to_col[i] = static_cast<std::size_t>(state.x[i]);
  }
  if (!out.is_permutation()) throw SolverError("solve_lapjv: produced a non-bijective assignment");
  out.objective_value = assignment_value(m, out.row_to_col);
  return out;
}

}  // namespace kgalign
