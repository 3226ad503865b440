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
#include <numeric>

#include "kgalign/solver.hpp"

namespace kgalign {

Assignment solve_bruteforce(const AdjacencyMatrix& a) {
  const Matrix& m = a.data;
  if (!m.square()) throw DimensionError("solve_bruteforce: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kBruteForceLimit) {
    throw InvalidArgument("solve_bruteforce: n = " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kBruteForceLimit) + " (n! permutations)");
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  Assignment best;
  best.objective = a.objective;
  best.row_to_col = perm;
  best.objective_value = assignment_value(m, perm);
  if (n == 0) return best;

  const bool maximize = a.objective == Objective::Max;
  // next_permutation walks in lexicographic order, so keeping only strict
  // improvements leaves the smallest optimal permutation.
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double value = assignment_value(m, perm);
    if (maximize ? value > best.objective_value : value < best.objective_value) {
      best.objective_value = value;
      best.row_to_col = perm;
    }
  }
  return best;
}

}  // namespace kgalign
