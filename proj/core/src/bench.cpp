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

#include "kgalign/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "kgalign/pipeline.hpp"
#include "kgalign/ranking.hpp"

namespace kgalign {

std::vector<ScaleRow> scale_benchmark(const std::vector<std::size_t>& sizes,
                                      const SyntheticParams& base, const AlignOptions& options,
                                      bool compare_sinkhorn) {
  using Clock = std::chrono::steady_clock;
  std::vector<ScaleRow> rows;
  for (std::size_t size : sizes) {
    SyntheticParams params = base;
    params.m1 = size;
    params.m2 = size;
    const SyntheticDataset data = make_synthetic(params);

    const auto start = Clock::now();
    const AlignResult result = align(data.side1, data.side2, options, &data.truth_index);
    ScaleRow row;
    row.size = size;
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    row.solve_seconds = result.timings.solve;
    row.hits_at_1 = result.report->hits_at_1;
    row.hits_at_10 = result.report->hits_at_10;
    row.mrr = result.report->mrr;
    row.argmax_hits_at_1 = std::stod(result.report->extra("argmax_hits@1"));

    if (compare_sinkhorn) {
      AdjacencyMatrix a = prepare_adjacency(
          fused_similarity(data.side1, data.side2, options.weights), options);
      const auto t = Clock::now();
      const Assignment assignment = solve_sinkhorn(a, options.sinkhorn);
      row.sinkhorn_solve_seconds = std::chrono::duration<double>(Clock::now() - t).count();
      row.sinkhorn_hits_at_1 = hits_at_n(rank_alignment(a, assignment), data.truth_index, 1);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_scale_table(std::ostream& out, const std::vector<ScaleRow>& rows) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%8s %10s %10s %9s %9s %9s %11s %12s %11s %12s\n", "size",
                "total_s", "solve_s", "hits@1", "hits@10", "mrr", "argmax@1", "sinkhorn_s",
                "sinkhorn@1", "sk/jv_ratio");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%8zu %10.3f %10.3f %9.4f %9.4f %9.4f %11.4f", r.size,
                  r.seconds, r.solve_seconds, r.hits_at_1, r.hits_at_10, r.mrr,
                  r.argmax_hits_at_1);
    out << buf;
    if (r.sinkhorn_solve_seconds) {
      const double ratio =
          r.solve_seconds > 0.0 ? *r.sinkhorn_solve_seconds / r.solve_seconds : 0.0;
      std::snprintf(buf, sizeof(buf), " %12.3f %11.4f %12.3f\n", *r.sinkhorn_solve_seconds,
                    *r.sinkhorn_hits_at_1, ratio);
    } else {
      std::snprintf(buf, sizeof(buf), " %12s %11s %12s\n", "-", "-", "-");
    }
    out << buf;
  }
}

}  // namespace kgalign
