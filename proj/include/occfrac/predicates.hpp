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

#include <optional>
#include <string>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"

namespace occfrac {

inline constexpr int kDefaultTransitivityLimit = 16;

/// The common degree if every vertex has it; nullopt otherwise. The empty
/// graph has no degree.
inline std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

inline bool is_d_regular(const Graph& g, int d) {
  auto r = regular_degree(g);
  return r && *r == d;
}

/// Two-colouring with side[v] in {0,1}; within each component the smallest
/// vertex gets side 0. nullopt if an odd cycle exists.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return false;
  return true;
}

inline bool is_connected(const Graph& g) { return g.components().size() <= 1; }

namespace detail {

// Extends a partial automorphism `map` (old -> new, -1 if unset) along
// `order`, checking adjacency against every mapped vertex.
inline bool extend_automorphism(const Graph& g, const std::vector<int>& order, std::size_t depth,
                                std::vector<int>& map, VertexSet image_used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int w = 0; w < g.vertex_count(); ++w) {
    if ((image_used >> w) & 1U) continue;
    if (g.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = order[i];
      ok = g.has_edge(u, v) == g.has_edge(map[u], w);
    }
    if (!ok) continue;
    map[v] = w;
    if (extend_automorphism(g, order, depth + 1, map, image_used | bit(w))) return true;
    map[v] = -1;
  }
  return false;
}

}  // namespace detail

/// Orbit of `v` under the automorphism group, by exhaustive search for an
/// automorphism sending v to each candidate.
inline VertexSet vertex_orbit(const Graph& g, int v, int limit = kDefaultTransitivityLimit) {
  const int n = g.vertex_count();
  if (n > limit) {
    throw CapabilityError("automorphism search is limited to " + std::to_string(limit) +
                          " vertices; assert vertex transitivity explicitly for larger graphs");
  }
  // BFS order from v keeps each new vertex adjacent to a mapped one, which
  // makes the adjacency checks prune early.
  std::vector<int> order;
  VertexSet seen = 0;
  for (int s : [&] {
         std::vector<int> starts{v};
         for (int u = 0; u < n; ++u)
           if (u != v) starts.push_back(u);
         return starts;
       }()) {
    if ((seen >> s) & 1U) continue;
    std::vector<int> queue{s};
    seen |= bit(s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      order.push_back(queue[h]);
      for_each_vertex(g.neighbors(queue[h]) & ~seen, [&](int w) {
        seen |= bit(w);
        queue.push_back(w);
      });
    }
  }
  VertexSet orbit = 0;
  for (int w = 0; w < n; ++w) {
    if (g.degree(w) != g.degree(v)) continue;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    map[v] = w;
    if (detail::extend_automorphism(g, order, 1, map, bit(w))) orbit |= bit(w);
  }
  return orbit;
}

inline bool is_vertex_transitive(const Graph& g, int limit = kDefaultTransitivityLimit) {
  if (g.vertex_count() <= 1) return true;
  return vertex_orbit(g, 0, limit) == g.vertices();
}

/// True iff every component of g is a copy of K_{d,d}.
inline bool is_kdd_union(const Graph& g, int d) {
  if (d <= 0 || g.vertex_count() == 0 || !is_d_regular(g, d)) return false;
  for (VertexSet comp : g.components()) {
    if (popcount(comp) != 2 * d) return false;
    if (!is_bipartite(g.induced(comp))) return false;
  }
  return true;
}

}  // namespace occfrac
