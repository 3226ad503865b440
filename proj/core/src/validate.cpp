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

#include "kgalign/validate.hpp"

#include <algorithm>
#include <sstream>

namespace kgalign {
namespace {

std::string side_name(int side) { return side == 1 ? "side 1" : "side 2"; }

void check_side(const SideData& data, int side, std::vector<Violation>& out) {
  for (const auto& id : data.catalog.duplicates()) {
    out.push_back({"duplicate id", side_name(side) + ": " + id});
  }
  for (View v : kAllViews) {
    const auto& view = data.views[index_of(v)];
    if (!view) continue;
    const std::string where = side_name(side) + " view " + std::string(to_string(v));
    if (view->rows() != data.catalog.count()) {
      out.push_back({"row count mismatch", where + ": " + std::to_string(view->rows()) +
                                               " rows, catalog has " +
                                               std::to_string(data.catalog.count())});
    }
    if (view->dimension() == 0) {
      out.push_back({"empty dimension", where});
    }
    if (!view->all_finite()) {
      out.push_back({"non-finite entry", where});
    }
  }
}

}  // namespace

bool ValidationReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].kind << " (" << violations[i].detail << ")";
  }
  return out.str();
}

ValidationReport validate_dataset(const SideData& side1, const SideData& side2) {
  ValidationReport report;
  check_side(side1, 1, report.violations);
  check_side(side2, 2, report.violations);
  for (View v : kAllViews) {
    const auto& a = side1.views[index_of(v)];
    const auto& b = side2.views[index_of(v)];
    if (a && b && a->dimension() != b->dimension()) {
      report.violations.push_back(
          {"view dimension mismatch", std::string(to_string(v)) + ": " +
                                          std::to_string(a->dimension()) + " vs " +
                                          std::to_string(b->dimension())});
    }
  }
  return report;
}

}  // namespace kgalign
