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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kgalign/io.hpp"
#include "kgalign/types.hpp"

namespace kgalign {

// (side-1 row, side-2 column) ground-truth pairs.
using TruthPairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Maps id pairs through the catalogs. Throws InvalidArgument naming every
// id that is not in its catalog.
TruthPairs resolve_truth(const std::vector<io::IdPair>& pairs, const EntityCatalog& sources,
                         const EntityCatalog& targets);

// Fraction of pairs whose true target is ranked within the first n.
// A target missing from its list counts as a miss. Throws InvalidArgument
// listing truth sources that have no ranked row.
double hits_at_n(const RankedAlignment& ranked, const TruthPairs& truth, std::size_t n);

// Mean reciprocal rank; absent targets contribute 0.
double mrr(const RankedAlignment& ranked, const TruthPairs& truth);

// Hits@1 of picking each row's best real column directly (ties to the
// smaller column), the local baseline to compare global assignment against.
double argmax_hits_at_1(const Matrix& scores, Objective objective, std::size_t real_cols,
                        const TruthPairs& truth);

// Order-sensitive fingerprint of a truth set, as 16 hex digits. The id
// form is what file-based runs record, so reports produced from different
// catalogs stay comparable.
std::string truth_fingerprint(const TruthPairs& truth);
std::string truth_fingerprint(const std::vector<io::IdPair>& truth);

struct MetricReport {
  std::string label;
  double hits_at_1 = 0.0;
  double hits_at_10 = 0.0;
  double mrr = 0.0;
  std::size_t pairs = 0;
  std::string config_hash;
  std::string truth_hash;
  // Extra key/value lines echoed verbatim (configuration, timings).
  std::vector<std::pair<std::string, std::string>> extras;

  std::string extra(std::string_view key) const;
};

MetricReport evaluate(const RankedAlignment& ranked, const TruthPairs& truth);

// "key: value" lines; metrics printed with 6 decimals.
void write_report(std::ostream& out, const MetricReport& report);
void write_report(const std::filesystem::path& path, const MetricReport& report);
MetricReport read_report(std::istream& in);
MetricReport read_report(const std::filesystem::path& path);

struct MetricDelta {
  std::string label;
  double hits_at_1 = 0.0;
  double hits_at_10 = 0.0;
  double mrr = 0.0;
  double d_hits_at_1 = 0.0;
  double d_hits_at_10 = 0.0;
  double d_mrr = 0.0;
};

struct DeltaTable {
  std::string baseline;
  std::vector<MetricDelta> rows;
};

// Per-metric differences (report - baseline). Throws InvalidArgument when
// the reports were computed on different truth sets.
DeltaTable compare_runs(const std::vector<MetricReport>& reports, std::size_t baseline = 0);
void write_delta_table(std::ostream& out, const DeltaTable& table);

}  // namespace kgalign
