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

// Brute-force oracles for the test suites. Each one is written from the
// definitions alone and shares no code with the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "occfrac/graph.hpp"
#include "occfrac/rational.hpp"

namespace oracle {

using occfrac::BigInt;
using occfrac::Graph;
using occfrac::Rational;

/// i_k by testing every vertex subset.
inline std::vector<long> independent_set_counts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v) & 1U)
        for (int w = v + 1; w < n && ok; ++w)
          if (((s >> w) & 1U) && g.has_edge(v, w)) ok = false;
    if (ok) ++c[static_cast<std::size_t>(std::popcount(s))];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

/// m_k by testing every edge subset.
inline std::vector<long> matching_counts(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) e.emplace_back(u, v);
  const auto m = e.size();
  std::vector<long> c(m + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      const auto mask = (std::uint64_t{1} << e[i].first) | (std::uint64_t{1} << e[i].second);
      if (used & mask) ok = false;
      used |= mask;
    }
    if (ok) ++c[static_cast<std::size_t>(std::popcount(s))];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

/// x f'(x) / (scale f(x)) for f given by its coefficient list.
inline Rational log_derivative(const std::vector<long>& c, const Rational& x, long scale) {
  Rational f, fp, p(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    f += Rational(c[k]) * p;
    fp += Rational(static_cast<long>(k) * c[k]) * p;
    p *= x;
  }
  return fp / (f * Rational(scale));
}

/// Tries every bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Graph on n vertices whose edges are the set bits of `mask`, in the order
/// (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bitpos = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bitpos)
      if ((mask >> bitpos) & 1U) g.add_edge(u, v);
  return g;
}

/// Number of isomorphism classes of graphs on n vertices, by mapping every
/// labeled graph to its least edge mask over all permutations.
inline std::size_t class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::pair<int, int>> idx;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) idx.emplace_back(u, v);
  auto pair_index = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  std::vector<bool> seen(std::size_t{1} << pairs, false);
  std::size_t classes = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
    if (seen[m]) continue;
    ++classes;
    for (const auto& q : perms) {
      std::uint64_t image = 0;
      for (int b = 0; b < pairs; ++b)
        if ((m >> b) & 1U)
          image |= std::uint64_t{1} << pair_index(q[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)].first)],
                                                  q[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)].second)]);
      seen[image] = true;
    }
  }
  return classes;
}

}  // namespace oracle
