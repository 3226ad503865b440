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

#include <string>
#include <vector>

#include "kgalign/types.hpp"

namespace kgalign {

/// Everything loaded for one side of an alignment task.
struct SideData {
  EntityCatalog catalog;
  PerView<EmbeddingView> views;
};

struct Violation {
  std::string kind;    // e.g. "view dimension mismatch"
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view kind) const;
  std::string summary() const;
};

// Checks duplicate ids, row counts against catalogs, non-finite entries and
// per-view dimension agreement across the two sides. Never throws.
ValidationReport validate_dataset(const SideData& side1, const SideData& side2);

}  // namespace kgalign
