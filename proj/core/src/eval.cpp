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

#include "kgalign/eval.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hash.hpp"

namespace kgalign {
namespace {

void check_sources(const RankedAlignment& ranked, const TruthPairs& truth) {
  std::vector<std::size_t> missing;
  for (const auto& [source, target] : truth) {
    if (source >= ranked.size()) missing.push_back(source);
  }
  if (missing.empty()) return;
  std::ostringstream msg;
  msg << "truth sources without a ranked row:";
  for (std::size_t s : missing) msg << ' ' << s;
  throw InvalidArgument(msg.str());
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

TruthPairs resolve_truth(const std::vector<io::IdPair>& pairs, const EntityCatalog& sources,
                         const EntityCatalog& targets) {
  TruthPairs out;
  out.reserve(pairs.size());
  std::vector<std::string> missing;
  for (const auto& [s, t] : pairs) {
    const auto si = sources.index_of(s);
    const auto ti = targets.index_of(t);
    if (!si) missing.push_back("source " + s);
    if (!ti) missing.push_back("target " + t);
    if (si && ti) out.emplace_back(*si, *ti);
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "truth ids not found in catalogs:";
    for (const auto& m : missing) msg << ' ' << m << ';';
    throw InvalidArgument(msg.str());
  }
  return out;
}

double hits_at_n(const RankedAlignment& ranked, const TruthPairs& truth, std::size_t n) {
  if (n == 0) throw InvalidArgument("hits_at_n: n must be positive");
  check_sources(ranked, truth);
  if (truth.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& [source, target] : truth) {
    const std::size_t rank = ranked.rank_of(source, target);
    if (rank != 0 && rank <= n) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double mrr(const RankedAlignment& ranked, const TruthPairs& truth) {
  check_sources(ranked, truth);
  if (truth.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [source, target] : truth) {
    const std::size_t rank = ranked.rank_of(source, target);
    if (rank != 0) sum += 1.0 / static_cast<double>(rank);
  }
  return sum / static_cast<double>(truth.size());
}

double argmax_hits_at_1(const Matrix& scores, Objective objective, std::size_t real_cols,
                        const TruthPairs& truth) {
  if (truth.empty()) return 0.0;
  real_cols = std::min(real_cols, scores.cols());
  std::size_t hits = 0;
  for (const auto& [source, target] : truth) {
    if (source >= scores.rows()) throw InvalidArgument("argmax_hits_at_1: source out of range");
    const auto row = scores.row(source);
    std::size_t best = 0;
    for (std::size_t j = 1; j < real_cols; ++j) {
      const bool better = objective == Objective::Max ? row[j] > row[best] : row[j] < row[best];
      if (better) best = j;
    }
    if (best == target) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

std::string truth_fingerprint(const TruthPairs& truth) {
  std::uint64_t h = detail::fnv1a64("truth");
  for (const auto& [s, t] : truth) {
    h = detail::fnv1a64(std::to_string(s) + ":" + std::to_string(t) + ";", h);
  }
  return detail::hex64(h);
}

std::string truth_fingerprint(const std::vector<io::IdPair>& truth) {
  std::uint64_t h = detail::fnv1a64("truth-ids");
  for (const auto& [s, t] : truth) {
    h = detail::fnv1a64(s, h);
    h = detail::fnv1a64(std::string_view("\t", 1), h);
    h = detail::fnv1a64(t, h);
    h = detail::fnv1a64(std::string_view("\n", 1), h);
  }
  return detail::hex64(h);
}

std::string MetricReport::extra(std::string_view key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return {};
}

MetricReport evaluate(const RankedAlignment& ranked, const TruthPairs& truth) {
  MetricReport r;
  r.hits_at_1 = hits_at_n(ranked, truth, 1);
  r.hits_at_10 = hits_at_n(ranked, truth, 10);
  r.mrr = mrr(ranked, truth);
  r.pairs = truth.size();
  r.truth_hash = truth_fingerprint(truth);
  return r;
}

void write_report(std::ostream& out, const MetricReport& report) {
  if (!report.label.empty()) out << "label: " << report.label << '\n';
  out << "hits@1: " << fixed6(report.hits_at_1) << '\n';
  out << "hits@10: " << fixed6(report.hits_at_10) << '\n';
  out << "mrr: " << fixed6(report.mrr) << '\n';
  out << "pairs: " << report.pairs << '\n';
  out << "config_hash: " << report.config_hash << '\n';
  out << "truth_hash: " << report.truth_hash << '\n';
  for (const auto& [k, v] : report.extras) out << k << ": " << v << '\n';
}

void write_report(const std::filesystem::path& path, const MetricReport& report) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_report(out, report);
}

MetricReport read_report(std::istream& in) {
  MetricReport r;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("report line without ':': " + line);
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    try {
      if (key == "label") r.label = value;
      else if (key == "hits@1") r.hits_at_1 = std::stod(value);
      else if (key == "hits@10") r.hits_at_10 = std::stod(value);
      else if (key == "mrr") r.mrr = std::stod(value);
      else if (key == "pairs") r.pairs = std::stoul(value);
      else if (key == "config_hash") r.config_hash = value;
      else if (key == "truth_hash") r.truth_hash = value;
      else r.extras.emplace_back(key, value);
    } catch (const std::logic_error&) {
      throw FormatError("bad value for '" + key + "': " + value);
    }
  }
  return r;
}

MetricReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  auto r = read_report(in);
  if (r.label.empty()) r.label = path.stem().string();
  return r;
}

DeltaTable compare_runs(const std::vector<MetricReport>& reports, std::size_t baseline) {
  if (baseline >= reports.size()) throw InvalidArgument("compare_runs: baseline out of range");
  const MetricReport& base = reports[baseline];
  DeltaTable table;
  table.baseline = base.label;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    if (r.truth_hash != base.truth_hash || r.pairs != base.pairs) {
      throw InvalidArgument("compare_runs: report '" + r.label +
                            "' was evaluated on a different truth set than '" + base.label + "'");
    }
    table.rows.push_back({r.label.empty() ? "run" + std::to_string(k) : r.label, r.hits_at_1,
                          r.hits_at_10, r.mrr, r.hits_at_1 - base.hits_at_1,
                          r.hits_at_10 - base.hits_at_10, r.mrr - base.mrr});
  }
  return table;
}

void write_delta_table(std::ostream& out, const DeltaTable& table) {
  char buf[256];
  out << "baseline: " << table.baseline << '\n';
  std::snprintf(buf, sizeof(buf), "%-24s %9s %9s %9s %10s %10s %10s\n", "run", "hits@1", "hits@10",
                "mrr", "d_hits@1", "d_hits@10", "d_mrr");
  out << buf;
  for (const auto& r : table.rows) {
    std::snprintf(buf, sizeof(buf), "%-24s %9.6f %9.6f %9.6f %+10.6f %+10.6f %+10.6f\n",
                  r.label.c_str(), r.hits_at_1, r.hits_at_10, r.mrr, r.d_hits_at_1,
                  r.d_hits_at_10, r.d_mrr);
    out << buf;
  }
}

}  // namespace kgalign
