// Copyright 2026 The occfrac Authors
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

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"

namespace occfrac {

// graph6, short form only (n < 63). The header byte is n + 63; the upper
// triangle follows column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// six bits per byte, each byte offset by 63, padded with zero bits.

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("empty graph6 string", 0);
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw FormatError("long-form graph6 (n >= 63) is not supported", 0);
  }
  if (header < 63 || header > 125) throw FormatError("invalid graph6 header byte", 0);
  const int n = header - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < 1 + bytes) {
    throw FormatError("truncated graph6 bit field", text.size());
  }
  if (text.size() > 1 + bytes) {
    throw FormatError("trailing data after graph6 bit field", 1 + bytes);
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw FormatError("invalid graph6 data byte", i);
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string serialize_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 63) throw CapabilityError("graph6 short form requires n < 63");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

namespace detail {

inline std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool parse_int_token(std::istringstream& in, long& out) {
  std::string tok;
  if (!(in >> tok)) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace detail

/// Edge list: a line holding n, then one "u v" line per edge. Blank lines and
/// '#' comments are ignored. `first_line` offsets reported line numbers.
inline Graph parse_edge_list(std::string_view text, std::size_t first_line = 1) {
  std::size_t line_no = first_line - 1;
  bool have_n = false;
  Graph g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = detail::strip(raw);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    std::string extra;
    if (!have_n) {
      long n = 0;
      if (!detail::parse_int_token(in, n) || (in >> extra)) {
        throw ParseError("expected a vertex count", line_no);
      }
      if (n < 0) throw ParseError("negative vertex count", line_no);
      if (n > kMaxVertices) throw ParseError("too many vertices", line_no);
      g = Graph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    long u = 0, v = 0;
    if (!detail::parse_int_token(in, u) || !detail::parse_int_token(in, v) || (in >> extra)) {
      throw ParseError("expected 'u v'", line_no);
    }
    const long n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("vertex out of range", line_no);
    }
    if (u == v) throw ParseError("self-loop", line_no);
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError("duplicate edge", line_no);
    }
  }
  if (!have_n) throw ParseError("missing vertex count", line_no == 0 ? 1 : line_no);
  return g;
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

enum class GraphFormat { kGraph6, kEdgeList };

/// A corpus is either one graph6 string per line or edge lists separated by
/// lines consisting of "---".
inline std::vector<Graph> parse_corpus(std::string_view text, GraphFormat format) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::string block;
  bool block_has_content = false;
  std::size_t block_start = 1;
  auto flush = [&] {
    if (block_has_content) out.push_back(parse_edge_list(block, block_start));
    block.clear();
    block_has_content = false;
  };
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (format == GraphFormat::kGraph6) {
      const auto line = detail::strip(raw);
      if (line.empty()) continue;
      try {
        out.push_back(parse_graph6(line));
      } catch (const FormatError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else {
      if (detail::strip(raw) == "---") {
        flush();
        block_start = line_no + 1;
      } else {
        if (block.empty()) block_start = line_no;
        block += std::string(raw) + "\n";
        if (!detail::strip(raw).empty()) block_has_content = true;
      }
    }
  }
  if (format == GraphFormat::kEdgeList) flush();
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace occfrac
