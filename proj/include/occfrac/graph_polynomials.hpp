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

#include <string>
#include <unordered_map>
#include <vector>

#include "occfrac/canonical.hpp"
#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/polynomial.hpp"
#include "occfrac/rational.hpp"

namespace occfrac {

struct PolynomialBudget {
  int max_vertices = 30;  // independence polynomial
  int max_edges = 80;     // matching polynomial
  int canonical_limit = kDefaultCanonicalLimit;
};

/// Independence and matching generating polynomials by deletion recurrences,
/// memoized per connected component.
///
/// Components with at most `canonical_limit` vertices are keyed by their
/// canonical form, larger ones by their labeled encoding. An engine is not
/// thread-safe; use one per thread (see `thread_engine()`).
class PolynomialEngine {
 public:
  explicit PolynomialEngine(PolynomialBudget budget = {}) : budget_(budget) {}

  const PolynomialBudget& budget() const { return budget_; }

  /// P_G(x) = sum_k i_k(G) x^k.
  IntPolynomial independence(const Graph& g) {
    if (g.vertex_count() > budget_.max_vertices) {
      throw CapabilityError("independence polynomial budget is " +
                            std::to_string(budget_.max_vertices) + " vertices (got " +
                            std::to_string(g.vertex_count()) + ")");
    }
    return product_over_components(g, g.vertices(), /*matching=*/false);
  }

  /// M_G(x) = sum_k m_k(G) x^k.
  IntPolynomial matching(const Graph& g) {
    if (g.edge_count() > budget_.max_edges) {
      throw CapabilityError("matching polynomial budget is " + std::to_string(budget_.max_edges) +
                            " edges (got " + std::to_string(g.edge_count()) + ")");
    }
    return product_over_components(g, g.vertices(), /*matching=*/true);
  }

  std::size_t cache_size() const {
    return ind_labeled_.size() + ind_canonical_.size() + match_labeled_.size() +
           match_canonical_.size();
  }

 private:
  using Cache = std::unordered_map<CanonicalKey, IntPolynomial>;

  IntPolynomial product_over_components(const Graph& g, VertexSet within, bool matching) {
    IntPolynomial result = IntPolynomial::one();
    for (VertexSet comp : g.components(within)) {
      const int size = popcount(comp);
      if (size == 1) {
        if (!matching) result *= IntPolynomial{1, 1};
        continue;
      }
      result *= connected(g.induced(comp), matching);
    }
    return result;
  }

  IntPolynomial connected(const Graph& c, bool matching) {
    Cache& labeled = matching ? match_labeled_ : ind_labeled_;
    Cache& canonical = matching ? match_canonical_ : ind_canonical_;
    const CanonicalKey lkey = labeled_key(c);
    if (auto it = labeled.find(lkey); it != labeled.end()) return it->second;
    CanonicalKey ckey;
    const bool small = c.vertex_count() <= budget_.canonical_limit;
    if (small) {
      ckey = canonical_key(c, budget_.canonical_limit);
      if (auto it = canonical.find(ckey); it != canonical.end()) {
        labeled.emplace(lkey, it->second);
        return it->second;
      }
    }
    IntPolynomial p = matching ? matching_recurrence(c) : independence_recurrence(c);
    if (small) canonical.emplace(ckey, p);
    labeled.emplace(lkey, p);
    return p;
  }

  // Maximum degree, ties to the smallest label.
  static int pivot(const Graph& c, VertexSet among) {
    int best = -1, best_deg = -1;
    for_each_vertex(among, [&](int v) {
      if (c.degree(v) > best_deg) {
        best = v;
        best_deg = c.degree(v);
      }
    });
    return best;
  }

  // P_G = P_{G-v} + x P_{G-N[v]}
  IntPolynomial independence_recurrence(const Graph& c) {
    const int n = c.vertex_count();
    if (c.edge_count() == n * (n - 1) / 2) return IntPolynomial{1, n};
    const int v = pivot(c, c.vertices());
    const VertexSet all = c.vertices();
    IntPolynomial without = product_over_components(c, all & ~bit(v), false);
    IntPolynomial with = product_over_components(c, all & ~(bit(v) | c.neighbors(v)), false);
    return without + IntPolynomial::monomial(1) * with;
  }

  // M_G = M_{G-e} + x M_{G-u-w}
  IntPolynomial matching_recurrence(const Graph& c) {
    const int u = pivot(c, c.vertices());
    const int w = pivot(c, c.neighbors(u));
    Graph minus_edge = c;
    minus_edge.remove_edge(u, w);
    IntPolynomial without = product_over_components(minus_edge, minus_edge.vertices(), true);
    IntPolynomial with = product_over_components(c, c.vertices() & ~(bit(u) | bit(w)), true);
    return without + IntPolynomial::monomial(1) * with;
  }

  PolynomialBudget budget_;
  Cache ind_labeled_, ind_canonical_, match_labeled_, match_canonical_;
};

/// Per-thread engine with the default budget; its memo persists across calls.
inline PolynomialEngine& thread_engine() {
  thread_local PolynomialEngine engine;
  return engine;
}

inline IntPolynomial independence_poly(const Graph& g) { return thread_engine().independence(g); }
inline IntPolynomial matching_gen_poly(const Graph& g) { return thread_engine().matching(g); }

namespace detail {
inline void require_positive_fugacity(const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("fugacity must be positive (got " + lambda.str() + ")");
}
}  // namespace detail

/// x P'(x) / (scale * P(x)) at x = lambda.
inline Rational log_derivative(const IntPolynomial& p, const Rational& lambda, const Rational& scale) {
  return lambda * p.derivative().eval(lambda) / (scale * p.eval(lambda));
}

/// Expected fraction of vertices in the hard-core random independent set.
inline Rational occupancy(const Graph& g, const Rational& lambda) {
  detail::require_positive_fugacity(lambda);
  if (g.vertex_count() == 0) throw DomainError("occupancy of the empty graph");
  return log_derivative(independence_poly(g), lambda, Rational(g.vertex_count()));
}

/// Expected fraction of edges in the monomer-dimer random matching.
inline Rational edge_occupancy(const Graph& g, const Rational& lambda) {
  detail::require_positive_fugacity(lambda);
  if (g.edge_count() == 0) throw DomainError("edge occupancy of an edgeless graph");
  return log_derivative(matching_gen_poly(g), lambda, Rational(g.edge_count()));
}

/// Law of the size of a random configuration weighted x^size.
struct SizeDistribution {
  std::vector<Rational> probabilities;  // index = size
  Rational fugacity;

  Rational mean() const {
    Rational m;
    for (std::size_t k = 0; k < probabilities.size(); ++k) m += probabilities[k] * Rational(k);
    return m;
  }
  Rational variance() const {
    Rational second;
    for (std::size_t k = 0; k < probabilities.size(); ++k)
      second += probabilities[k] * Rational(k * k);
    const Rational m = mean();
    return second - m * m;
  }
};

inline SizeDistribution size_distribution(const IntPolynomial& p, const Rational& lambda) {
  detail::require_positive_fugacity(lambda);
  if (p.is_zero()) throw DomainError("size distribution of the zero polynomial");
  SizeDistribution out{{}, lambda};
  const Rational z = p.eval(lambda);
  Rational power(1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.probabilities.push_back(Rational(p[k]) * power / z);
    power *= lambda;
  }
  return out;
}

}  // namespace occfrac
