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

#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"

namespace occfrac {

namespace detail {
inline void require_positive(int v, const char* what) {
  if (v <= 0) throw ParameterError(std::string(what) + " must be positive");
}
}  // namespace detail

/// K_{d,d}: left side 0..d-1, right side d..2d-1.
inline Graph complete_bipartite(int d) {
  detail::require_positive(d, "d");
  Graph g(2 * d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) g.add_edge(u, d + v);
  return g;
}

/// H_{d,n}: n/(2d) disjoint copies of K_{d,d}, copy c on vertices 2dc..2d(c+1)-1.
inline Graph kdd_union(int d, int n) {
  detail::require_positive(d, "d");
  detail::require_positive(n, "n");
  if (n % (2 * d) != 0) {
    throw ParameterError("H_{d,n} requires 2d to divide n (d=" + std::to_string(d) +
                         ", n=" + std::to_string(n) + ")");
  }
  Graph g(n);
  for (int base = 0; base < n; base += 2 * d)
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) g.add_edge(base + u, base + d + v);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path(int n) {
  detail::require_positive(n, "n");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph complete(int n) {
  detail::require_positive(n, "n");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Edgeless graph on n vertices (n may be 0).
inline Graph empty_graph(int n) {
  if (n < 0) throw ParameterError("n must be nonnegative");
  return Graph(n);
}

/// Q_k: vertices are bit strings, adjacent when they differ in one bit.
inline Graph hypercube(int k) {
  detail::require_positive(k, "k");
  if (k > 6) throw CapabilityError("hypercube dimension above 6 exceeds the vertex limit");
  const int n = 1 << k;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

/// C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes v -- n+v.
inline Graph prism(int n) {
  if (n < 3) throw ParameterError("prism needs n >= 3");
  Graph g(2 * n);
  for (int v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
    g.add_edge(n + v, n + (v + 1) % n);
    g.add_edge(v, n + v);
  }
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
inline Graph petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);
    g.add_edge(5 + v, 5 + (v + 2) % 5);
    g.add_edge(v, v + 5);
  }
  return g;
}

/// Builds a named family. Names: complete_bipartite (d), H (d, n),
/// cycle (n), complete (n), hypercube (k), prism (n), petersen (), path (n),
/// empty (n).
inline Graph generate(std::string_view family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw ParameterError(std::string(family) + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "complete_bipartite" || family == "kdd") {
    need(1);
    return complete_bipartite(params[0]);
  }
  if (family == "H" || family == "hdn") {
    need(2);
    return kdd_union(params[0], params[1]);
  }
  if (family == "cycle") {
    need(1);
    return cycle(params[0]);
  }
  if (family == "complete") {
    need(1);
    return complete(params[0]);
  }
  if (family == "hypercube") {
    need(1);
    return hypercube(params[0]);
  }
  if (family == "prism") {
    need(1);
    return prism(params[0]);
  }
  if (family == "petersen") {
    need(0);
    return petersen();
  }
  if (family == "path") {
    need(1);
    return path(params[0]);
  }
  if (family == "empty") {
    need(1);
    return empty_graph(params[0]);
  }
  throw ParameterError("unknown graph family '" + std::string(family) + "'");
}

/// Parses "name:p1:p2..." (e.g. "kdd:3", "hdn:2:8", "petersen").
inline Graph generate_from_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = spec.find(':', pos);
    parts.push_back(spec.substr(pos, colon == std::string_view::npos ? spec.npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    int v = 0;
    auto [p, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
    if (ec != std::errc() || p != parts[i].data() + parts[i].size()) {
      throw ParameterError("bad integer parameter '" + std::string(parts[i]) + "' in '" +
                           std::string(spec) + "'");
    }
    params.push_back(v);
  }
  return generate(parts[0], params);
}

}  // namespace occfrac
