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

// kgalign: ranked entity alignment from the command line.
//
//   kgalign synth --out data/ --m1 1000 --m2 1000 --dim 64 --noise 0.3 --seed 7
//   kgalign align --dataset data/ --output ranked.tsv --report report.txt
//   kgalign eval  --ranked ranked.tsv --truth data/truth.tsv
//   kgalign eval  --compare a.txt b.txt
//   kgalign bench --sizes 100,1000 --noise 0.3 --sinkhorn

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgalign/bench.hpp"
#include "kgalign/config.hpp"
#include "kgalign/eval.hpp"
#include "kgalign/io.hpp"
#include "kgalign/pipeline.hpp"
#include "kgalign/synthetic.hpp"

namespace {

using namespace kgalign;

// Algorithm flags shared by align and bench. Empty strings mean "keep the
// config/default value".
struct AlgorithmFlags {
  std::string weights;
  std::string objective;
  std::string solver;
  std::string directional;
  bool no_directional = false;
  std::optional<double> temperature;
  std::optional<int> iterations;

  void attach(CLI::App& app) {
    app.add_option("--weights", weights, "Fusion weights E,ST,AT,AR (default 1,0.75,0.75,0.15)");
    app.add_option("--objective", objective, "min | max")
        ->check(CLI::IsMember({"min", "max"}));
    app.add_option("--solver", solver, "lapjv | sinkhorn")
        ->check(CLI::IsMember({"lapjv", "sinkhorn"}));
    app.add_option("--directional", directional, "Add the transpose before solving: true | false")
        ->check(CLI::IsMember({"true", "false"}));
    app.add_flag("--no-directional", no_directional, "Same as --directional false");
    app.add_option("--temperature", temperature, "Sinkhorn temperature");
    app.add_option("--iterations", iterations, "Sinkhorn iteration cap");
  }

  void apply(AlignOptions& o) const {
    if (!weights.empty()) {
      std::vector<double> w;
      std::stringstream in(weights);
      std::string item;
      while (std::getline(in, item, ',')) w.push_back(std::stod(item));
      if (w.size() != 4) throw InvalidArgument("--weights needs 4 comma-separated values");
      o.weights = FusionWeights(w[0], w[1], w[2], w[3]);
    }
    if (!objective.empty()) o.objective = *parse_objective(objective);
    if (!solver.empty()) o.solver = *parse_solver(solver);
    if (!directional.empty()) o.directional = directional == "true";
    if (no_directional) o.directional = false;
    if (temperature) o.sinkhorn.temperature = *temperature;
    if (iterations) o.sinkhorn.iterations = *iterations;
    o.sinkhorn.validate();
  }
};

std::vector<std::string> parse_view_flags(const std::vector<std::string>& flags,
                                          std::array<std::filesystem::path, 4>& out) {
  std::vector<std::string> errors;
  for (const auto& flag : flags) {
    const auto eq = flag.find('=');
    const auto view = eq == std::string::npos ? std::nullopt : parse_view(flag.substr(0, eq));
    if (!view) {
      errors.push_back("expected VIEW=PATH with VIEW in E|ST|AT|AR, got " + flag);
      continue;
    }
    out[index_of(*view)] = flag.substr(eq + 1);
  }
  return errors;
}

void print_timings(const StageTimings& t) {
  std::fprintf(stderr,
               "timings: load %.3fs similarity %.3fs prepare %.3fs solve %.3fs rank %.3fs "
               "evaluate %.3fs total %.3fs\n",
               t.load, t.similarity, t.prepare, t.solve, t.rank, t.evaluate, t.total());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranked knowledge-graph entity alignment"};
  app.require_subcommand(1);

  // align
  auto* align_cmd = app.add_subcommand("align", "Fuse, solve and rank an alignment task");
  std::string config_path, dataset, source_catalog, target_catalog, similarity_input, truth;
  std::string ranked_out, report_out;
  std::vector<std::string> source_views, target_views;
  std::optional<std::size_t> top_k;
  std::optional<std::uint64_t> align_seed;
  AlgorithmFlags align_flags;
  align_cmd->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  align_cmd->add_option("--dataset", dataset, "Directory written by `kgalign synth`")
      ->check(CLI::ExistingDirectory);
  align_cmd->add_option("--source-catalog", source_catalog, "Side-1 ids, one per line");
  align_cmd->add_option("--target-catalog", target_catalog, "Side-2 ids, one per line");
  align_cmd->add_option("--source-view", source_views, "VIEW=PATH embedding file for side 1");
  align_cmd->add_option("--target-view", target_views, "VIEW=PATH embedding file for side 2");
  align_cmd->add_option("--similarity-input", similarity_input,
                        "Align a precomputed KGAS1 similarity matrix (plug-in mode)");
  align_cmd->add_option("--truth", truth, "Ground-truth TSV for the metric report");
  align_cmd->add_option("--output", ranked_out, "Ranked TSV output path");
  align_cmd->add_option("--report", report_out, "Metric report output path");
  align_cmd->add_option("--top-k", top_k, "Keep only the best K candidates per row in the TSV");
  align_cmd->add_option("--seed", align_seed, "Accepted for symmetry; alignment is deterministic");
  align_flags.attach(*align_cmd);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic alignment dataset");
  SyntheticParams synth;
  std::string synth_out;
  synth_cmd->add_option("--out", synth_out, "Output directory")->required();
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--m1", synth.m1, "Side-1 entity count")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--m2", synth.m2, "Side-2 entity count")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--dim", synth.dimension, "Embedding dimension")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--noise", synth.noise, "Per-coordinate Gaussian noise sigma")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--overlap", synth.overlap, "Fraction of entities with a counterpart")
      ->check(CLI::Range(0.0, 1.0));
  synth_cmd->add_flag("--shuffle", synth.shuffle, "Randomly permute side-2 rows");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time the pipeline across synthetic sizes");
  std::vector<std::size_t> sizes{100, 1000};
  SyntheticParams bench_base;
  bool bench_sinkhorn = false;
  AlgorithmFlags bench_flags;
  bench_cmd->add_option("--sizes", sizes, "Entity counts per side")->delimiter(',');
  bench_cmd->add_option("--seed", bench_base.seed, "Random seed");
  bench_cmd->add_option("--dim", bench_base.dimension, "Embedding dimension");
  bench_cmd->add_option("--noise", bench_base.noise, "Per-coordinate noise sigma");
  bench_cmd->add_flag("--sinkhorn", bench_sinkhorn, "Also solve with Sinkhorn and report the ratio");
  bench_flags.attach(*bench_cmd);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Score a ranked TSV or compare metric reports");
  std::string eval_ranked, eval_truth, eval_report, eval_label;
  std::vector<std::string> compare;
  std::size_t baseline = 0;
  eval_cmd->add_option("--ranked", eval_ranked, "Ranked TSV written by align");
  eval_cmd->add_option("--truth", eval_truth, "Ground-truth TSV");
  eval_cmd->add_option("--report", eval_report, "Write the metric report here");
  eval_cmd->add_option("--label", eval_label, "Label stored in the report");
  eval_cmd->add_option("--compare", compare, "Metric reports to compare");
  eval_cmd->add_option("--baseline", baseline, "Index of the baseline report in --compare");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*align_cmd) {
      AlignConfig config = config_path.empty() ? AlignConfig{} : load_config(config_path);
      if (!dataset.empty()) config.use_dataset(dataset);
      if (!source_catalog.empty()) config.source_catalog = source_catalog;
      if (!target_catalog.empty()) config.target_catalog = target_catalog;
      auto errors = parse_view_flags(source_views, config.source_views);
      auto more = parse_view_flags(target_views, config.target_views);
      errors.insert(errors.end(), more.begin(), more.end());
      if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "error: " << e << '\n';
        return 2;
      }
      if (!similarity_input.empty()) config.similarity_input = similarity_input;
      if (!truth.empty()) config.truth = truth;
      if (!ranked_out.empty()) config.ranked_output = ranked_out;
      if (!report_out.empty()) config.report_output = report_out;
      if (top_k) config.top_k = *top_k;
      align_flags.apply(config.options);

      const AlignResult result = run_align(config);
      if (config.ranked_output.empty()) {
        io::write_ranked(std::cout, result.ranked, result.sources, result.targets, config.top_k);
      }
      if (result.report && config.report_output.empty()) write_report(std::cerr, *result.report);
      print_timings(result.timings);
      return 0;
    }

    if (*synth_cmd) {
      const auto data = make_synthetic(synth);
      write_dataset(synth_out, data);
      std::cerr << "wrote " << synth.m1 << " x " << synth.m2 << " dataset with "
                << data.truth.size() << " truth pairs to " << synth_out << '\n';
      return 0;
    }

    if (*bench_cmd) {
      AlignOptions options;
      bench_flags.apply(options);
      const auto rows = scale_benchmark(sizes, bench_base, options, bench_sinkhorn);
      write_scale_table(std::cout, rows);
      return 0;
    }

    if (*eval_cmd) {
      if (!compare.empty()) {
        std::vector<MetricReport> reports;
        for (const auto& path : compare) reports.push_back(read_report(std::filesystem::path(path)));
        write_delta_table(std::cout, compare_runs(reports, baseline));
        return 0;
      }
      if (eval_ranked.empty() || eval_truth.empty()) {
        std::cerr << "error: eval needs --ranked and --truth, or --compare\n";
        return 2;
      }
      const auto table = io::read_ranked(eval_ranked);
      const auto truth_ids = io::read_truth(eval_truth);
      // Targets cut off by --top-k never appear in the TSV; they count as
      // misses rather than unknown ids.
      auto target_ids = table.targets.ids();
      for (const auto& [source, target] : truth_ids) {
        if (!table.targets.index_of(target)) target_ids.push_back(target);
      }
      const EntityCatalog targets(Side::G2, std::move(target_ids));
      const auto pairs = resolve_truth(truth_ids, table.sources, targets);
      MetricReport report = evaluate(table.ranked, pairs);
      report.label = eval_label;
      report.truth_hash = truth_fingerprint(truth_ids);
      if (eval_report.empty()) {
        write_report(std::cout, report);
      } else {
        write_report(std::filesystem::path(eval_report), report);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
