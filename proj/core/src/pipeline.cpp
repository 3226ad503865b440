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

#include "kgalign/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "kgalign/io.hpp"
#include "kgalign/matrix_prep.hpp"
#include "kgalign/ranking.hpp"
#include "kgalign/similarity.hpp"

namespace kgalign {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

void finish(AdjacencyMatrix adjacency, const AlignOptions& options, const TruthPairs* truth,
            AlignResult& result) {
  auto t = Clock::now();
  result.assignment = solve(adjacency, options.solver, options.sinkhorn);
  result.timings.solve = seconds_since(t);

  t = Clock::now();
  result.ranked = rank_alignment(adjacency, result.assignment);
  result.timings.rank = seconds_since(t);

  if (truth != nullptr) {
    t = Clock::now();
    MetricReport report = evaluate(result.ranked, *truth);
    report.extras.emplace_back(
        "argmax_hits@1",
        number(argmax_hits_at_1(adjacency.data, adjacency.objective, adjacency.real_cols, *truth)));
    result.report = std::move(report);
    result.timings.evaluate = seconds_since(t);
  }
}

std::vector<std::string> index_ids(std::string_view prefix, std::size_t count) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back(std::string(prefix) + std::to_string(i));
  return ids;
}

}  // namespace

SimilarityMatrix fused_similarity(const SideData& side1, const SideData& side2,
                                  const FusionWeights& weights) {
  SimilarityMatrix fused{Matrix(side1.catalog.count(), side2.catalog.count(), 0.0), std::nullopt};
  bool any = false;
  for (View v : kAllViews) {
    const auto& a = side1.views[index_of(v)];
    const auto& b = side2.views[index_of(v)];
    if (!a || !b || weights[v] == 0.0) continue;
    accumulate_similarity(fused.data, normalize_rows(*a), normalize_rows(*b), weights[v]);
    any = true;
  }
  if (!any) throw InvalidArgument("no view with positive weight is present on both sides");
  return fused;
}

AdjacencyMatrix prepare_adjacency(SimilarityMatrix fused, const AlignOptions& options) {
  AdjacencyMatrix a = pad_to_square(std::move(fused), options.objective);
  return options.directional ? add_directional(std::move(a)) : a;
}

AlignResult align(const SideData& side1, const SideData& side2, const AlignOptions& options,
                  const TruthPairs* truth) {
  const auto report = validate_dataset(side1, side2);
  if (!report.ok()) throw InvalidArgument("invalid dataset: " + report.summary());

  AlignResult result;
  result.sources = side1.catalog;
  result.targets = side2.catalog;

  auto t = Clock::now();
  SimilarityMatrix fused = fused_similarity(side1, side2, options.weights);
  result.timings.similarity = seconds_since(t);

  t = Clock::now();
  AdjacencyMatrix adjacency = prepare_adjacency(std::move(fused), options);
  result.timings.prepare = seconds_since(t);

  finish(std::move(adjacency), options, truth, result);
  return result;
}

AlignResult align_similarity(SimilarityMatrix similarity, const AlignOptions& options,
                             const TruthPairs* truth) {
  for (double x : similarity.data.values()) {
    if (!std::isfinite(x)) throw InvalidArgument("similarity matrix has a non-finite entry");
  }
  AlignResult result;
  result.sources = EntityCatalog(Side::G1, index_ids("row", similarity.rows()));
  result.targets = EntityCatalog(Side::G2, index_ids("col", similarity.cols()));

  auto t = Clock::now();
  AdjacencyMatrix adjacency = prepare_adjacency(std::move(similarity), options);
  result.timings.prepare = seconds_since(t);

  finish(std::move(adjacency), options, truth, result);
  return result;
}

AlignResult run_align(const AlignConfig& config) {
  const auto t0 = Clock::now();
  const bool plug_in = !config.similarity_input.empty();
  if (!config.report_output.empty() && config.truth.empty()) {
    throw InvalidArgument("a report needs a truth file");
  }

  // Everything is read and checked before any computation starts.
  SideData side1;
  SideData side2;
  std::optional<SimilarityMatrix> external;
  if (plug_in) {
    external = io::read_similarity(config.similarity_input);
    side1.catalog = config.source_catalog.empty()
                        ? EntityCatalog(Side::G1, index_ids("row", external->rows()))
                        : io::read_catalog(config.source_catalog, Side::G1);
    side2.catalog = config.target_catalog.empty()
                        ? EntityCatalog(Side::G2, index_ids("col", external->cols()))
                        : io::read_catalog(config.target_catalog, Side::G2);
    if (side1.catalog.count() != external->rows() || side2.catalog.count() != external->cols()) {
      throw InvalidArgument("similarity input is " + std::to_string(external->rows()) + "x" +
                            std::to_string(external->cols()) + " but catalogs hold " +
                            std::to_string(side1.catalog.count()) + " and " +
                            std::to_string(side2.catalog.count()) + " ids");
    }
  } else {
    if (config.source_catalog.empty() || config.target_catalog.empty()) {
      throw InvalidArgument("source and target catalogs are required");
    }
    side1.catalog = io::read_catalog(config.source_catalog, Side::G1);
    side2.catalog = io::read_catalog(config.target_catalog, Side::G2);
    for (View v : kAllViews) {
      const auto& p1 = config.source_views[index_of(v)];
      const auto& p2 = config.target_views[index_of(v)];
      if (!p1.empty()) side1.views[index_of(v)] = io::read_embedding(p1, v);
      if (!p2.empty()) side2.views[index_of(v)] = io::read_embedding(p2, v);
    }
  }
  const auto validation = validate_dataset(side1, side2);
  if (!validation.ok()) throw InvalidArgument("invalid dataset: " + validation.summary());

  std::optional<TruthPairs> truth;
  std::string truth_hash;
  if (!config.truth.empty()) {
    const auto truth_ids = io::read_truth(config.truth);
    truth = resolve_truth(truth_ids, side1.catalog, side2.catalog);
    truth_hash = truth_fingerprint(truth_ids);
  }
  const double load_seconds = seconds_since(t0);

  AlignResult result = plug_in
                           ? align_similarity(std::move(*external), config.options,
                                              truth ? &*truth : nullptr)
                           : align(side1, side2, config.options, truth ? &*truth : nullptr);
  result.sources = std::move(side1.catalog);
  result.targets = std::move(side2.catalog);
  result.timings.load = load_seconds;

  if (result.report) {
    auto& r = *result.report;
    const auto& o = config.options;
    const auto& w = o.weights.values();
    r.config_hash = config_hash(config);
    r.truth_hash = truth_hash;
    r.extras.emplace_back("mode", plug_in ? "similarity-input" : "views");
    r.extras.emplace_back("weights", number(w[0]) + "," + number(w[1]) + "," + number(w[2]) +
                                         "," + number(w[3]));
    r.extras.emplace_back("objective", std::string(to_string(o.objective)));
    r.extras.emplace_back("solver", std::string(to_string(o.solver)));
    r.extras.emplace_back("directional", o.directional ? "true" : "false");
    if (o.solver == SolverKind::Sinkhorn) {
      r.extras.emplace_back("sinkhorn_temperature", number(o.sinkhorn.temperature));
      r.extras.emplace_back("sinkhorn_iterations", std::to_string(o.sinkhorn.iterations));
      r.extras.emplace_back("sinkhorn_convergence_tol", number(o.sinkhorn.convergence_tol));
    }
    r.extras.emplace_back("top_k", std::to_string(config.top_k));
    r.extras.emplace_back("source_entities", std::to_string(result.sources.count()));
    r.extras.emplace_back("target_entities", std::to_string(result.targets.count()));
    r.extras.emplace_back("objective_value", number(result.assignment.objective_value));
  }

  if (!config.ranked_output.empty()) {
    io::write_ranked(config.ranked_output, result.ranked, result.sources, result.targets,
                     config.top_k);
  }
  if (!config.report_output.empty()) {
    write_report(config.report_output, *result.report);
  }
  return result;
}

}  // namespace kgalign
