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

#include "kgalign/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace kgalign::io {
namespace {

static_assert(std::numeric_limits<float>::is_iec559 && std::numeric_limits<double>::is_iec559);

template <class T>
T byteswap(T value) {
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

template <class T>
T to_little(T value) {
  if constexpr (std::endian::native == std::endian::little) {
    return value;
  } else {
    return byteswap(value);
  }
}

template <class T>
void put(std::ostream& out, T value) {
  value = to_little(value);
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T get(std::istream& in, const std::filesystem::path& path) {
  T value;
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw FormatError(path.string() + ": truncated header");
  }
  return to_little(value);
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, mode);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, mode);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

template <class T>
void write_matrix(const std::filesystem::path& path, std::string_view magic,
                  const DenseMatrix<T>& m) {
  if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX) {
    throw DimensionError("matrix too large for a 32-bit header");
  }
  auto out = open_out(path, std::ios::binary);
  out.write(magic.data(), static_cast<std::streamsize>(magic.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(m.rows()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(m.cols()));
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(m.data()),
              static_cast<std::streamsize>(m.values().size() * sizeof(T)));
  } else {
    for (T x : m.values()) put<T>(out, x);
  }
  if (!out) throw FormatError("write failed: " + path.string());
}

template <class T>
DenseMatrix<T> read_matrix(const std::filesystem::path& path, std::string_view magic) {
  auto in = open_in(path, std::ios::binary);
  std::string got(magic.size(), '\0');
  if (!in.read(got.data(), static_cast<std::streamsize>(got.size())) || got != magic) {
    throw FormatError(path.string() + ": bad magic, expected " + std::string(magic));
  }
  const auto rows = get<std::uint32_t>(in, path);
  const auto cols = get<std::uint32_t>(in, path);
  const std::uintmax_t expected =
      magic.size() + 8 + std::uintmax_t{rows} * std::uintmax_t{cols} * sizeof(T);
  const auto actual = std::filesystem::file_size(path);
  if (actual != expected) {
    throw FormatError(path.string() + ": size " + std::to_string(actual) + " bytes, header implies " +
                      std::to_string(expected));
  }
  DenseMatrix<T> m(rows, cols);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(m.values().size() * sizeof(T)));
  if (!in) throw FormatError(path.string() + ": truncated payload");
  if constexpr (std::endian::native != std::endian::little) {
    for (T& x : m.values()) x = byteswap(x);
  }
  return m;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

constexpr std::string_view kRankedHeader = "source_id\trank\tcandidate_id\texchange_loss";

}  // namespace

void write_embedding(const std::filesystem::path& path, const EmbeddingView& view) {
  write_matrix(path, kEmbeddingMagic, view.matrix());
}

EmbeddingView read_embedding(const std::filesystem::path& path, View view) {
  return {view, read_matrix<float>(path, kEmbeddingMagic)};
}

void write_similarity(const std::filesystem::path& path, const SimilarityMatrix& matrix) {
  write_matrix(path, kSimilarityMagic, matrix.data);
}

SimilarityMatrix read_similarity(const std::filesystem::path& path) {
  return {read_matrix<double>(path, kSimilarityMagic), std::nullopt};
}

void write_catalog(const std::filesystem::path& path, const EntityCatalog& catalog) {
  auto out = open_out(path);
  for (const auto& id : catalog.ids()) {
    if (id.find('\n') != std::string::npos) throw InvalidArgument("entity id contains a newline");
    out << id << '\n';
  }
}

EntityCatalog read_catalog(const std::filesystem::path& path, Side side) {
  auto in = open_in(path);
  std::vector<std::string> ids;
  std::string line;
  while (next_line(in, line)) ids.push_back(line);
  return {side, std::move(ids)};
}

void write_truth(const std::filesystem::path& path, const std::vector<IdPair>& pairs) {
  auto out = open_out(path);
  for (const auto& [s, t] : pairs) out << s << '\t' << t << '\n';
}

std::vector<IdPair> read_truth(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<IdPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_tabs(line);
    if (f.size() != 2) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected source_id<TAB>target_id");
    }
    pairs.emplace_back(std::move(f[0]), std::move(f[1]));
  }
  return pairs;
}

void write_ranked(std::ostream& out, const RankedAlignment& ranked, const EntityCatalog& sources,
                  const EntityCatalog& targets, std::size_t top_k) {
  out << kRankedHeader << '\n';
  char loss[64];
  for (std::size_t i = 0; i < ranked.rows.size(); ++i) {
    const auto& row = ranked.rows[i];
    const std::size_t limit = top_k == 0 ? row.size() : std::min(top_k, row.size());
    const std::string& source = sources.id(i);
    for (std::size_t k = 0; k < limit; ++k) {
      // Avoid printing "-0.000000" for losses that round to zero.
      const double value = std::abs(row[k].loss) < 5e-7 ? 0.0 : row[k].loss;
      std::snprintf(loss, sizeof(loss), "%.6f", value);
      out << source << '\t' << (k + 1) << '\t' << targets.id(row[k].column) << '\t' << loss << '\n';
    }
  }
}

void write_ranked(const std::filesystem::path& path, const RankedAlignment& ranked,
                  const EntityCatalog& sources, const EntityCatalog& targets, std::size_t top_k) {
  auto out = open_out(path);
  write_ranked(out, ranked, sources, targets, top_k);
  if (!out) throw FormatError("write failed: " + path.string());
}

RankedTable read_ranked(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::string> source_ids;
  std::vector<std::string> target_ids;
  std::unordered_map<std::string, std::size_t> source_index;
  std::unordered_map<std::string, std::size_t> target_index;
  RankedAlignment ranked;

  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty() || (lineno == 1 && line == kRankedHeader)) continue;
    const auto f = split_tabs(line);
    const auto where = path.string() + ":" + std::to_string(lineno);
    if (f.size() != 4) throw FormatError(where + ": expected 4 tab-separated fields");

    auto [sit, new_source] = source_index.try_emplace(f[0], source_ids.size());
    if (new_source) {
      source_ids.push_back(f[0]);
      ranked.rows.emplace_back();
    }
    auto [tit, new_target] = target_index.try_emplace(f[2], target_ids.size());
    if (new_target) target_ids.push_back(f[2]);

    auto& row = ranked.rows[sit->second];
    std::size_t rank = 0;
    double loss = 0.0;
    try {
      rank = std::stoul(f[1]);
      loss = std::stod(f[3]);
    } catch (const std::exception&) {
      throw FormatError(where + ": bad rank or loss");
    }
    if (rank != row.size() + 1) {
      throw FormatError(where + ": ranks for " + f[0] + " must be consecutive from 1");
    }
    row.push_back({tit->second, loss});
  }
  return {EntityCatalog(Side::G1, std::move(source_ids)),
          EntityCatalog(Side::G2, std::move(target_ids)), std::move(ranked)};
}

}  // namespace kgalign::io
