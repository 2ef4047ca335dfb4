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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "occfrac/errors.hpp"

namespace occfrac {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet all_vertices(int n) {
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Iterate the members of a vertex set in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = lowest(s);
    s &= s - 1;
    f(v);
  }
}

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_size(n), 0) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const {
    int twice = 0;
    for (auto a : adj_) twice += popcount(a);
    return twice / 2;
  }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  VertexSet vertices() const { return all_vertices(vertex_count()); }

  /// Adds {u,v}. Throws on loops and out-of-range endpoints; returns false
  /// if the edge was already present.
  bool add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge endpoint out of range");
    }
    if (u == v) throw ParameterError("self-loop");
    if (has_edge(u, v)) return false;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return true;
  }

  void remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  /// Edges (u,v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u) {
      for_each_vertex(adj_[u] & ~all_vertices(u + 1),
                      [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 preserving order.
  Graph induced(VertexSet keep) const {
    std::vector<int> index(static_cast<std::size_t>(vertex_count()), -1);
    int k = 0;
    for_each_vertex(keep, [&](int v) { index[v] = k++; });
    Graph g(k);
    for_each_vertex(keep, [&](int v) {
      for_each_vertex(adj_[v] & keep, [&](int w) {
        g.adj_[index[v]] |= bit(index[w]);
      });
    });
    return g;
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const {
    Graph g(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
      for_each_vertex(adj_[v], [&](int w) { g.adj_[perm[v]] |= bit(perm[w]); });
    }
    return g;
  }

  /// Connected components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> components(VertexSet within) const {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (left) {
      VertexSet comp = bit(lowest(left));
      VertexSet frontier = comp;
      while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
        next &= within & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }
  std::vector<VertexSet> components() const { return components(vertices()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_size(int n) {
    if (n < 0) throw ParameterError("negative vertex count");
    if (n > kMaxVertices) {
      throw CapabilityError("graphs are limited to " +
                            std::to_string(kMaxVertices) + " vertices");
    }
    return static_cast<std::size_t>(n);
  }
  std::vector<VertexSet> adj_;
};

/// Vertex-disjoint union; vertices of `b` are shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

}  // namespace occfrac
