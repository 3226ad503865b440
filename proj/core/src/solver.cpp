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

#include "kgalign/solver.hpp"

#include <cmath>

namespace kgalign {

void SinkhornConfig::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("sinkhorn temperature must be positive");
  }
  if (iterations < 1) throw InvalidArgument("sinkhorn iterations must be >= 1");
  if (!(convergence_tol > 0.0)) throw InvalidArgument("sinkhorn convergence_tol must be positive");
}

std::string_view to_string(SolverKind kind) {
  return kind == SolverKind::Lapjv ? "lapjv" : "sinkhorn";
}

std::optional<SolverKind> parse_solver(std::string_view text) {
  if (text == "lapjv") return SolverKind::Lapjv;
  if (text == "sinkhorn") return SolverKind::Sinkhorn;
  return std::nullopt;
}

Assignment solve(const AdjacencyMatrix& a, SolverKind kind, const SinkhornConfig& config) {
  return kind == SolverKind::Lapjv ? solve_lapjv(a) : solve_sinkhorn(a, config);
}

}  // namespace kgalign
