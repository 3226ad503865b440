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

#include "kgalign/config.hpp"

#include <fstream>

#include <json.hpp>

#include "hash.hpp"

namespace kgalign {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string side_prefix(Side side) { return side == Side::G1 ? "source" : "target"; }

fs::path resolve(const fs::path& base, const std::string& p) {
  if (p.empty()) return {};
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

template <class T>
T parse_or_throw(std::optional<T> v, const std::string& field, const std::string& text) {
  if (!v) throw FormatError("config: bad value for " + field + ": " + text);
  return *v;
}

json views_json(const std::array<fs::path, 4>& views) {
  json out = json::object();
  for (View v : kAllViews) {
    if (!views[index_of(v)].empty()) out[std::string(to_string(v))] = views[index_of(v)].string();
  }
  return out;
}

// Fields that determine the alignment; used by both the hash and to_json.
json semantic_json(const AlignConfig& c) {
  const auto& o = c.options;
  return json{
      {"source_catalog", c.source_catalog.string()},
      {"target_catalog", c.target_catalog.string()},
      {"source_views", views_json(c.source_views)},
      {"target_views", views_json(c.target_views)},
      {"similarity_input", c.similarity_input.string()},
      {"truth", c.truth.string()},
      {"weights", o.weights.values()},
      {"objective", std::string(to_string(o.objective))},
      {"solver", std::string(to_string(o.solver))},
      {"directional", o.directional},
      {"top_k", c.top_k},
      {"sinkhorn",
       {{"temperature", o.sinkhorn.temperature},
        {"iterations", o.sinkhorn.iterations},
        {"convergence_tol", o.sinkhorn.convergence_tol}}},
  };
}

}  // namespace

fs::path DatasetLayout::source_catalog(const fs::path& dir) { return dir / "source.catalog"; }
fs::path DatasetLayout::target_catalog(const fs::path& dir) { return dir / "target.catalog"; }
fs::path DatasetLayout::truth(const fs::path& dir) { return dir / "truth.tsv"; }
fs::path DatasetLayout::view(const fs::path& dir, Side side, View view) {
  return dir / (side_prefix(side) + "." + std::string(to_string(view)) + ".kgav");
}

void AlignConfig::use_dataset(const fs::path& dir) {
  source_catalog = DatasetLayout::source_catalog(dir);
  target_catalog = DatasetLayout::target_catalog(dir);
  for (View v : kAllViews) {
    const auto s = DatasetLayout::view(dir, Side::G1, v);
    const auto t = DatasetLayout::view(dir, Side::G2, v);
    source_views[index_of(v)] = fs::exists(s) ? s : fs::path{};
    target_views[index_of(v)] = fs::exists(t) ? t : fs::path{};
  }
  if (fs::exists(DatasetLayout::truth(dir))) truth = DatasetLayout::truth(dir);
}

AlignConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("config " + path.string() + ": " + e.what());
  }
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");

  AlignConfig c;
  try {
    if (j.contains("dataset")) c.use_dataset(resolve(base, j.at("dataset").get<std::string>()));
    if (j.contains("source_catalog")) c.source_catalog = resolve(base, j["source_catalog"]);
    if (j.contains("target_catalog")) c.target_catalog = resolve(base, j["target_catalog"]);
    for (const auto& [key, views] : {std::pair{"source_views", &c.source_views},
                                     std::pair{"target_views", &c.target_views}}) {
      if (!j.contains(key)) continue;
      for (const auto& [name, file] : j[key].items()) {
        const View v = parse_or_throw(parse_view(name), key, name);
        (*views)[index_of(v)] = resolve(base, file.get<std::string>());
      }
    }
    if (j.contains("similarity_input")) c.similarity_input = resolve(base, j["similarity_input"]);
    if (j.contains("truth")) c.truth = resolve(base, j["truth"]);
    if (j.contains("output")) {
      const auto& o = j["output"];
      if (o.contains("ranked")) c.ranked_output = resolve(base, o["ranked"]);
      if (o.contains("report")) c.report_output = resolve(base, o["report"]);
    }
    if (j.contains("top_k")) c.top_k = j["top_k"].get<std::size_t>();

    auto& o = c.options;
    if (j.contains("weights")) {
      const auto w = j["weights"].get<std::vector<double>>();
      if (w.size() != 4) throw FormatError("config: weights needs 4 values (E, ST, AT, AR)");
      o.weights = FusionWeights(w[0], w[1], w[2], w[3]);
    }
    if (j.contains("objective")) {
      const auto s = j["objective"].get<std::string>();
      o.objective = parse_or_throw(parse_objective(s), "objective", s);
    }
    if (j.contains("solver")) {
      const auto s = j["solver"].get<std::string>();
      o.solver = parse_or_throw(parse_solver(s), "solver", s);
    }
    if (j.contains("directional")) o.directional = j["directional"].get<bool>();
    if (j.contains("sinkhorn")) {
      const auto& s = j["sinkhorn"];
      o.sinkhorn.temperature = s.value("temperature", o.sinkhorn.temperature);
      o.sinkhorn.iterations = s.value("iterations", o.sinkhorn.iterations);
      o.sinkhorn.convergence_tol = s.value("convergence_tol", o.sinkhorn.convergence_tol);
      o.sinkhorn.validate();
    }
  } catch (const json::exception& e) {
    throw FormatError("config " + path.string() + ": " + e.what());
  }
  return c;
}

std::string to_json(const AlignConfig& config) {
  json j = semantic_json(config);
  j["output"] = {{"ranked", config.ranked_output.string()},
                 {"report", config.report_output.string()}};
  return j.dump(2);
}

std::string config_hash(const AlignConfig& config) {
  return detail::hex64(detail::fnv1a64(semantic_json(config).dump()));
}

}  // namespace kgalign
