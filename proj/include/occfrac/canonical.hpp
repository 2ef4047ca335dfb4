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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/graph_io.hpp"

namespace occfrac {

inline constexpr int kDefaultCanonicalLimit = 10;

/// Isomorphism-class key. The bytes are the graph6 encoding of the
/// lexicographically least adjacency encoding over all relabelings that list
/// vertices in nondecreasing degree order.
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    std::vector<int> degs(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) degs[v] = g.degree(v);
    slot_degree_ = degs;
    std::sort(slot_degree_.begin(), slot_degree_.end());
    perm_.assign(static_cast<std::size_t>(n_), -1);
    best_perm_ = perm_;
    column_.assign(static_cast<std::size_t>(n_), 0);
    best_column_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::vector<int> run() {
    if (n_ > 0) search(0, 0);
    return best_perm_;
  }

 private:
  // Column j packs adj(perm[i], perm[j]) for i < j with i = 0 as the most
  // significant bit, which is lexicographic order on the encoding.
  std::uint64_t column(int j, int v) const {
    std::uint64_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | (g_.has_edge(perm_[i], v) ? 1U : 0U);
    return c;
  }

  // Compares the current prefix (columns 0..depth) against the best labeling.
  int compare_prefix(int depth) const {
    for (int j = 0; j <= depth; ++j) {
      if (column_[j] != best_column_[j]) return column_[j] < best_column_[j] ? -1 : 1;
    }
    return 0;
  }

  void search(int depth, VertexSet used) {
    if (depth == n_) {
      if (!found_ || compare_prefix(n_ - 1) < 0) {
        found_ = true;
        best_perm_ = perm_;
        best_column_ = column_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (g_.degree(v) != slot_degree_[depth]) continue;
      perm_[depth] = v;
      column_[depth] = column(depth, v);
      if (found_ && compare_prefix(depth) > 0) continue;
      search(depth + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> slot_degree_;
  std::vector<int> perm_, best_perm_;
  std::vector<std::uint64_t> column_, best_column_;
  bool found_ = false;
};

}  // namespace detail

/// Relabeling of `g` into canonical form; returns position -> old vertex.
inline std::vector<int> canonical_order(const Graph& g, int limit = kDefaultCanonicalLimit) {
  if (g.vertex_count() > limit) {
    throw CapabilityError("canonical labeling is limited to " + std::to_string(limit) +
                          " vertices (got " + std::to_string(g.vertex_count()) + ")");
  }
  return detail::Canonicalizer(g).run();
}

inline Graph canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit) {
  const auto order = canonical_order(g, limit);
  std::vector<int> perm(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) perm[order[p]] = static_cast<int>(p);
  return g.relabeled(perm);
}

inline CanonicalKey canonical_key(const Graph& g, int limit = kDefaultCanonicalLimit) {
  return CanonicalKey{serialize_graph6(canonical_form(g, limit))};
}

/// Label-dependent key: the graph6 encoding as given. Used to memoize graphs
/// too large to canonicalize.
inline CanonicalKey labeled_key(const Graph& g) {
  return CanonicalKey{serialize_graph6(g)};
}

}  // namespace occfrac

template <>
struct std::hash<occfrac::CanonicalKey> {
  std::size_t operator()(const occfrac::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
