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

#include <cstddef>
#include <optional>
#include <string_view>

#include "kgalign/types.hpp"

namespace kgalign {

struct SinkhornConfig {
  double temperature = 0.05;
  int iterations = 100;
  double convergence_tol = 1e-6;

  // Throws InvalidArgument unless temperature > 0, iterations >= 1 and
  // convergence_tol > 0.
  void validate() const;
};

enum class SolverKind { Lapjv, Sinkhorn };

std::string_view to_string(SolverKind kind);
std::optional<SolverKind> parse_solver(std::string_view text);

/// Exact Jonker-Volgenant assignment: column reduction, reduction transfer,
/// two rounds of augmenting row reduction, then shortest augmenting paths
/// for the rows still free. O(n^3) worst case.
///
/// Optimizes in the direction of `a.objective`; a maximization is solved as
/// the minimization of the negated scores without copying the matrix.
/// Throws SolverError on non-finite entries and DimensionError on a
/// non-square matrix.
Assignment solve_lapjv(const AdjacencyMatrix& a);

inline constexpr std::size_t kBruteForceLimit = 10;

/// Exhaustive search over all n! permutations, n <= 10. Ties keep the
/// lexicographically smallest permutation.
Assignment solve_bruteforce(const AdjacencyMatrix& a);

/// Approximate assignment: Sinkhorn-normalize K = exp(+-A / temperature),
/// then greedily lock the largest remaining entry until every row has a
/// column. objective_value is re-evaluated on `a`.
///
/// Each row of the exponent is shifted by its maximum before exponentiating
/// (row scaling does not change the balanced matrix). Throws SolverError
/// when K still underflows or overflows; the message asks for a larger
/// temperature.
Assignment solve_sinkhorn(const AdjacencyMatrix& a, const SinkhornConfig& config = {});

Assignment solve(const AdjacencyMatrix& a, SolverKind kind, const SinkhornConfig& config = {});

}  // namespace kgalign
