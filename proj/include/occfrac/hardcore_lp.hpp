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

// The hard-core linear program over distributions of free neighbourhoods.
//
// The free neighbourhood of v with respect to an independent set I is the
// subgraph induced by the neighbours of v that have no neighbour in I \ N(v).
// Any d-regular graph induces a distribution p over graphs C on at most d
// vertices satisfying
//
//   sum_C p_C = 1,   sum_C p_C (a_C - b_C) = 0,
//   a_C = 1 / P_C(x),   b_C = (1 + x) P_C'(x) / (d P_C(x)),
//
// with occupancy fraction x/(2(1+x)) sum_C p_C (a_C + b_C). The LP maximum
// over all such p is attained only at support {empty, d isolated vertices}.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "occfrac/canonical.hpp"
#include "occfrac/certificate.hpp"
#include "occfrac/enumeration.hpp"
#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/graph_io.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/polynomial.hpp"
#include "occfrac/predicates.hpp"
#include "occfrac/rational.hpp"
#include "occfrac/simplex.hpp"

namespace occfrac::hardcore {

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 7;

/// One isomorphism class of graphs on at most d vertices.
struct HardcoreConfig {
  Graph graph;
  CanonicalKey key;
  IntPolynomial poly;  // independence polynomial P_C

  const std::string& id() const { return key.bytes; }
  int vertex_count() const { return graph.vertex_count(); }

  /// a_C = 1 / P_C(x)
  Rational a(const Rational& lambda) const { return Rational(1) / poly.eval(lambda); }
  /// b_C = (1 + x) P_C'(x) / (d P_C(x))
  Rational b(const Rational& lambda, int d) const {
    return (Rational(1) + lambda) * poly.derivative().eval(lambda) /
           (Rational(d) * poly.eval(lambda));
  }
};

namespace detail {

// Graphs on k vertices from those on k-1 by adding a vertex with every
// possible neighbourhood, deduplicated by canonical key.
inline std::vector<std::vector<HardcoreConfig>> build_config_levels(int d) {
  std::vector<std::vector<HardcoreConfig>> levels(static_cast<std::size_t>(d) + 1);
  Graph empty(0);
  levels[0].push_back({empty, canonical_key(empty), IntPolynomial::one()});
  for (int k = 1; k <= d; ++k) {
    std::map<CanonicalKey, Graph> seen;
    for (const auto& prev : levels[static_cast<std::size_t>(k) - 1]) {
      for (VertexSet nbrs = 0; nbrs < bit(k - 1); ++nbrs) {
        Graph g(k);
        for (auto [u, v] : prev.graph.edges()) g.add_edge(u, v);
        for_each_vertex(nbrs, [&](int u) { g.add_edge(u, k - 1); });
        const Graph canon = canonical_form(g);
        seen.emplace(CanonicalKey{serialize_graph6(canon)}, canon);
      }
    }
    for (auto& [key, g] : seen) {
      levels[static_cast<std::size_t>(k)].push_back({g, key, independence_poly(g)});
    }
  }
  return levels;
}

}  // namespace detail

inline void require_degree_in_range(int d) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw CapabilityError("hard-core configurations are enumerated for 2 <= d <= 7 (got d=" +
                          std::to_string(d) + ")");
  }
}

/// All isomorphism classes of graphs on 0..d vertices, ordered by vertex
/// count then canonical key. Results are cached process-wide.
inline const std::vector<HardcoreConfig>& enumerate_configs(int d) {
  require_degree_in_range(d);
  static std::mutex mu;
  static std::map<int, std::vector<HardcoreConfig>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<HardcoreConfig> flat;
  for (auto& level : detail::build_config_levels(d))
    for (auto& c : level) flat.push_back(std::move(c));
  return cache.emplace(d, std::move(flat)).first->second;
}

/// Index of the empty configuration and of d isolated vertices.
inline std::size_t empty_index(int /*d*/) { return 0; }
inline std::size_t isolated_index(int d) {
  const auto& configs = enumerate_configs(d);
  const auto key = canonical_key(Graph(d));
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (configs[i].key == key) return i;
  throw CertificateFailure("isolated", "d isolated vertices missing from configurations");
}

/// Occupancy fraction of K_{d,d}: x(1+x)^{d-1} / (2(1+x)^d - 1).
inline Rational kdd_occupancy(int d, const Rational& lambda) {
  const Rational one_plus = Rational(1) + lambda;
  return lambda * pow(one_plus, d - 1) / (Rational(2) * pow(one_plus, d) - Rational(1));
}

inline LinearProgram build_primal(int d, const Rational& lambda) {
  require_degree_in_range(d);
  ::occfrac::detail::require_positive_fugacity(lambda);
  const auto& configs = enumerate_configs(d);
  const Rational scale = lambda / (Rational(2) * (Rational(1) + lambda));
  LinearProgram lp;
  lp.rows.assign(2, {});
  lp.rhs = {Rational(1), Rational(0)};
  for (const auto& c : configs) {
    const Rational a = c.a(lambda), b = c.b(lambda, d);
    lp.objective.push_back(scale * (a + b));
    lp.rows[0].push_back(Rational(1));
    lp.rows[1].push_back(a - b);
  }
  return lp;
}

/// The unique distribution supported on {empty, d isolated vertices} that
/// satisfies the constraints, from the 2x2 system. Returns (p_empty, p_isolated).
inline std::pair<Rational, Rational> two_point_solution(int d, const Rational& lambda) {
  const Rational a_iso = pow(Rational(1) + lambda, -d);
  // p0 + p1 = 1;  p0 (1 - 0) + p1 (a_iso - 1) = 0
  auto sol = solve_square_system({{Rational(1), Rational(1)}, {Rational(1), a_iso - Rational(1)}},
                                 {Rational(1), Rational(0)});
  if (!sol) throw CertificateFailure("two-point support", "constraint submatrix is singular");
  return {(*sol)[0], (*sol)[1]};
}

/// Lambda_1 = 2 / (2 - (1+x)^{-d}),  Lambda_2 = 1 - Lambda_1.
inline std::pair<Rational, Rational> dual_values(int d, const Rational& lambda) {
  const Rational l1 = Rational(2) / (Rational(2) - pow(Rational(1) + lambda, -d));
  return {l1, Rational(1) - l1};
}

/// Evaluates the closed-form dual point on every configuration. Expected:
/// slack zero exactly on {empty, isolated} and strictly positive elsewhere.
inline CertificateReport evaluate_dual_certificate(int d, const Rational& lambda) {
  require_degree_in_range(d);
  ::occfrac::detail::require_positive_fugacity(lambda);
  const auto& configs = enumerate_configs(d);
  const auto [l1, l2] = dual_values(d, lambda);
  const std::size_t iso = isolated_index(d);

  CertificateReport rep;
  rep.dual_values = {{"Lambda_1", l1}, {"Lambda_2", l2}};
  rep.optimum = lambda / (Rational(2) * (Rational(1) + lambda)) * l1;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    const Rational a = c.a(lambda), b = c.b(lambda, d);
    Rational slack = l1 + l2 * (a - b) - (a + b);
    const bool expect_tight = i == empty_index(d) || i == iso;
    if (slack.is_zero()) rep.tight_set.push_back(c.id());
    if (expect_tight && !slack.is_zero()) {
      rep.failures.push_back(c.id() + ": expected zero slack, got " + slack.str());
    } else if (!expect_tight && slack.sign() <= 0) {
      rep.failures.push_back(c.id() + ": expected positive slack, got " + slack.str());
    }
    rep.slacks.push_back({c.id(), std::move(slack)});
  }
  if (rep.optimum != kdd_occupancy(d, lambda)) {
    rep.failures.push_back("optimum " + rep.optimum.str() + " differs from K_{d,d} occupancy");
  }
  return rep;
}

/// As evaluate_dual_certificate, but throws CertificateFailure on the first
/// violated constraint.
inline CertificateReport dual_certificate(int d, const Rational& lambda) {
  auto rep = evaluate_dual_certificate(d, lambda);
  if (!rep.valid()) throw CertificateFailure("hardcore d=" + std::to_string(d), rep.failures.front());
  return rep;
}

/// Both sides of x P_C'/(P_C - 1) < x d (1+x)^{d-1} / ((1+x)^d - 1): the mean
/// size of a nonempty random independent set in C versus in d isolated
/// vertices.
struct IndFactReport {
  Rational lhs;
  Rational rhs;
  bool strict() const { return lhs < rhs; }
};

inline IndFactReport check_ind_fact(const Graph& c, int d, const Rational& lambda) {
  ::occfrac::detail::require_positive_fugacity(lambda);
  if (c.vertex_count() == 0) throw DomainError("left side undefined for the empty configuration");
  if (c.vertex_count() > d) throw DomainError("configuration has more than d vertices");
  const IntPolynomial p = independence_poly(c);
  const Rational one_plus = Rational(1) + lambda;
  IndFactReport r;
  r.lhs = lambda * p.derivative().eval(lambda) / (p.eval(lambda) - Rational(1));
  r.rhs = lambda * Rational(d) * pow(one_plus, d - 1) / (pow(one_plus, d) - Rational(1));
  return r;
}

/// s_k = sum_{i=1}^{floor(k/2)} (k - 2i)(t_{k-i} r_i - t_i r_{k-i}), with
/// t_i = C(d, i) and r_i the coefficients of P_C, for k = 1..2d: every
/// coefficient of (x P'_{dK1})(P_C - 1) - (x P'_C)(P_{dK1} - 1).
inline std::vector<BigInt> s_k_coefficients(const Graph& c, int d) {
  if (c.vertex_count() > d) throw DomainError("configuration has more than d vertices");
  const IntPolynomial r = independence_poly(c);
  std::vector<BigInt> s;
  for (int k = 1; k <= 2 * d; ++k) {
    BigInt sum = 0;
    for (int i = 1; 2 * i <= k; ++i) {
      sum += BigInt(k - 2 * i) *
             (binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k - i)) * r[static_cast<std::size_t>(i)] -
              binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(i)) * r[static_cast<std::size_t>(k - i)]);
    }
    s.push_back(sum);
  }
  return s;
}

/// The same coefficients read off the polynomial product directly.
inline std::vector<BigInt> s_k_by_expansion(const Graph& c, int d) {
  const IntPolynomial pc = independence_poly(c);
  const IntPolynomial pk = independence_poly(Graph(d));
  const IntPolynomial x = IntPolynomial::monomial(1);
  const IntPolynomial one = IntPolynomial::one();
  const IntPolynomial diff = (x * pk.derivative()) * (pc - one) - (x * pc.derivative()) * (pk - one);
  std::vector<BigInt> out;
  for (int k = 1; k <= 2 * d; ++k) out.push_back(diff[static_cast<std::size_t>(k)]);
  return out;
}

// ---------------------------------------------------------------------------
// Triangle-free relaxation: distributions of Y, the number of uncovered
// neighbours of a uniform vertex, with E[Y] = d E[(1+x)^{-Y}].

struct TriangleFreeResult {
  LinearProgram lp;
  LPSolution solution;
  Rational occupancy_bound;  // optimum * x / (d (1 + x))
  std::vector<int> support;
};

inline LinearProgram triangle_free_program(int d, const Rational& lambda) {
  if (d < 1) throw DomainError("d must be positive");
  ::occfrac::detail::require_positive_fugacity(lambda);
  LinearProgram lp;
  lp.rows.assign(2, {});
  lp.rhs = {Rational(1), Rational(0)};
  for (int y = 0; y <= d; ++y) {
    lp.objective.push_back(Rational(y));
    lp.rows[0].push_back(Rational(1));
    lp.rows[1].push_back(Rational(y) - Rational(d) * pow(Rational(1) + lambda, -y));
  }
  return lp;
}

inline TriangleFreeResult build_triangle_free_lp(int d, const Rational& lambda) {
  TriangleFreeResult r{triangle_free_program(d, lambda), {}, {}, {}};
  r.solution = solve(r.lp);
  if (r.solution.status != LPStatus::kOptimal) {
    throw CertificateFailure("triangle-free LP", std::string("status ") + to_string(r.solution.status));
  }
  r.occupancy_bound = r.solution.value * lambda / (Rational(d) * (Rational(1) + lambda));
  for (int y = 0; y <= d; ++y)
    if (!r.solution.primal[static_cast<std::size_t>(y)].is_zero()) r.support.push_back(y);
  return r;
}

/// Law of Y (uncovered neighbours of a uniform vertex) in a d-regular graph.
inline std::vector<Rational> uncovered_neighbor_distribution(const Graph& g, const Rational& lambda,
                                                             OracleLimits limits = {}) {
  const auto d = regular_degree(g);
  if (!d) throw DomainError("graph is not regular");
  ::occfrac::detail::require_positive_fugacity(lambda);
  ConfigurationSpace space(g, Model::kHardcore, limits);
  WeightedTally<int> tally;
  for (const auto& c : space.configurations()) {
    const VertexSet unc = space.uncovered(c);
    for (int v = 0; v < g.vertex_count(); ++v) tally.add(popcount(unc & g.neighbors(v)), c.size);
  }
  auto probs = tally.finalize(lambda, space.partition(lambda), Rational(g.vertex_count()));
  std::vector<Rational> out(static_cast<std::size_t>(*d) + 1);
  for (auto& [y, p] : probs) out[static_cast<std::size_t>(y)] = p;
  return out;
}

// ---------------------------------------------------------------------------
// Free-neighbourhood distribution of an actual graph.

struct EmpiricalConfigDistribution {
  int d = 0;
  std::vector<Rational> column_mass;  // aligned with enumerate_configs(d)
  Rational total_mass;
  Rational constraint_residual;  // sum p (a - b); zero for a feasible point
  Rational objective;            // x/(2(1+x)) sum p (a + b)
  Rational alpha_uncovered;      // x/(1+x) E[1/P_C]
  Rational alpha_neighbors;      // x/d E[P_C'/P_C]

  std::vector<std::string> support(const std::vector<HardcoreConfig>& configs) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < column_mass.size(); ++i)
      if (!column_mass[i].is_zero()) out.push_back(configs[i].id());
    return out;
  }
};

/// Distribution of the free neighbourhood of a uniform vertex under the
/// hard-core measure, by exhaustive enumeration (n <= 14 by default).
///
/// The LP moments are accumulated per labeled free set, so any d >= 1 works.
/// `column_mass` is filled only when 2 <= d <= 7, where the configuration
/// list exists.
inline EmpiricalConfigDistribution empirical_config_distribution(const Graph& g, const Rational& lambda,
                                                                 int max_vertices = 14) {
  const auto d = regular_degree(g);
  if (!d || *d < 1) throw DomainError("graph is not regular of positive degree");
  ::occfrac::detail::require_positive_fugacity(lambda);
  if (g.vertex_count() > max_vertices) {
    throw CapabilityError("free-neighbourhood enumeration is limited to " +
                          std::to_string(max_vertices) + " vertices");
  }
  ConfigurationSpace space(g, Model::kHardcore, OracleLimits{max_vertices, 0});
  WeightedTally<VertexSet> tally;
  for (const auto& conf : space.configurations()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      VertexSet blocked = 0;
      for_each_vertex(conf.vertices & ~g.neighbors(v), [&](int u) { blocked |= g.neighbors(u); });
      tally.add(g.neighbors(v) & ~blocked, conf.size);
    }
  }
  const auto mass = tally.finalize(lambda, space.partition(lambda), Rational(g.vertex_count()));

  EmpiricalConfigDistribution out;
  out.d = *d;
  const bool columns = *d >= kMinDegree && *d <= kMaxDegree;
  std::unordered_map<CanonicalKey, std::size_t> index;
  if (columns) {
    const auto& configs = enumerate_configs(*d);
    out.column_mass.assign(configs.size(), Rational(0));
    for (std::size_t i = 0; i < configs.size(); ++i) index.emplace(configs[i].key, i);
  }
  const Rational one_plus = Rational(1) + lambda;
  for (const auto& [free, p] : mass) {
    const Graph c = g.induced(free);
    const IntPolynomial poly = independence_poly(c);
    const Rational pv = poly.eval(lambda), dv = poly.derivative().eval(lambda);
    const Rational a = Rational(1) / pv, b = one_plus * dv / (Rational(*d) * pv);
    out.total_mass += p;
    out.constraint_residual += p * (a - b);
    out.objective += p * (a + b);
    out.alpha_uncovered += p * a;
    out.alpha_neighbors += p * dv / pv;
    if (columns) out.column_mass[index.at(canonical_key(c))] += p;
  }
  out.objective *= lambda / (Rational(2) * one_plus);
  out.alpha_uncovered *= lambda / one_plus;
  out.alpha_neighbors *= lambda / Rational(*d);
  return out;
}

}  // namespace occfrac::hardcore
