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
#include <iosfwd>
#include <optional>
#include <vector>

#include "kgalign/config.hpp"
#include "kgalign/synthetic.hpp"

namespace kgalign {

struct ScaleRow {
  std::size_t size = 0;
  double seconds = 0.0;        // end-to-end, excluding data generation
  double solve_seconds = 0.0;
  double hits_at_1 = 0.0;
  double hits_at_10 = 0.0;
  double mrr = 0.0;
  double argmax_hits_at_1 = 0.0;
  std::optional<double> sinkhorn_solve_seconds;
  std::optional<double> sinkhorn_hits_at_1;
};

/// For each size m, generates an m x m synthetic instance from `base`
/// (m1 = m2 = m) and times the full alignment. With compare_sinkhorn the
/// same adjacency is also solved with Sinkhorn.
std::vector<ScaleRow> scale_benchmark(const std::vector<std::size_t>& sizes,
                                      const SyntheticParams& base, const AlignOptions& options,
                                      bool compare_sinkhorn);

void write_scale_table(std::ostream& out, const std::vector<ScaleRow>& rows);

}  // namespace kgalign
