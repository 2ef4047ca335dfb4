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


#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <set>

#include "occfrac/corpus.hpp"
#include "occfrac/families.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/matching_lp.hpp"
#include "occfrac/predicates.hpp"
#include "oracles.hpp"

namespace {

using namespace occfrac;
using namespace occfrac::matching;

const Rational kGrid[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};

TEST(Triples, Enumeration) {
  EXPECT_EQ(enumerate_triples(2).size(), 5U);
  EXPECT_EQ(enumerate_triples(3).size(), 14U);
  const auto two = enumerate_triples(2);
  EXPECT_NE(std::find(two.begin(), two.end(), Triple{0, 0, 1}), two.end());
  EXPECT_EQ(std::find(two.begin(), two.end(), Triple{1, 0, 1}), two.end());
  for (int d = 2; d <= 8; ++d) {
    const auto ts = enumerate_triples(d);
    EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
    std::size_t brute = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) brute += (i + k <= d - 1 && j + k <= d - 1);
    EXPECT_EQ(ts.size(), brute);
  }
  EXPECT_THROW(enumerate_triples(1), DomainError);
}

TEST(Triples, NeighbourhoodPolynomial) {
  EXPECT_EQ(m_ijk({0, 0, 0}), IntPolynomial::one());
  EXPECT_EQ(m_ijk({1, 1, 0}), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(m_ijk({0, 0, 1}), (IntPolynomial{1, 2}));
  // Brute force: matchings of the graph spanned by the neighbourhood edges of
  // a fixed edge uw, with i pendant edges at u, j at w and k triangles.
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 2; ++k) {
        Graph g(2 + i + j + k);
        int next = 2;
        for (int a = 0; a < i; ++a) g.add_edge(0, next++);
        for (int a = 0; a < j; ++a) g.add_edge(1, next++);
        for (int a = 0; a < k; ++a) {
          g.add_edge(0, next);
          g.add_edge(1, next++);
        }
        std::vector<long> expected = oracle::matching_counts(g);
        std::vector<long> got;
        const IntPolynomial poly = m_ijk({i, j, k});
        for (const auto& c : poly.coefficients()) got.push_back(c.get_si());
        EXPECT_EQ(got, expected) << Triple{i, j, k}.str();
      }
}

TEST(Triples, AlphaBar) {
  EXPECT_EQ(alpha_bar({0, 0, 0}, Rational(1), 2), Rational(0));
  EXPECT_EQ(alpha_bar({1, 1, 0}, Rational(1), 2), Rational(2, 5));
  EXPECT_EQ(alpha_bar({0, 0, 1}, Rational(1), 2), Rational(1, 4));
}

TEST(Gamma, Examples) {
  const auto e = gamma_e({0, 0, 0}, Rational(1), 3);
  EXPECT_EQ(e, (RationalVector{Rational(1), Rational(0), Rational(0)}));
  const auto f = gamma_f({0, 0, 0}, Rational(1), 2);
  EXPECT_FALSE(f[0].is_zero() && f[1].is_zero());
  EXPECT_THROW(gamma_f({0, 0, 0}, Rational(1), 1), DomainError);
  EXPECT_THROW(gamma_e({2, 0, 0}, Rational(1), 2), DomainError);
}

TEST(Gamma, DistributionsOnGrid) {
  for (int d = 2; d <= 7; ++d)
    for (const auto& x : kGrid)
      for (const auto& tr : enumerate_triples(d)) {
        for (const auto& v : {gamma_e(tr, x, d), gamma_f(tr, x, d)}) {
          ASSERT_EQ(v.size(), static_cast<std::size_t>(d));
          Rational sum;
          for (const auto& p : v) {
            EXPECT_GE(p.sign(), 0) << tr.str();
            sum += p;
          }
          EXPECT_EQ(sum, Rational(1)) << tr.str() << " d=" << d;
        }
      }
}

// Independent oracle for the triple and the two uncovered-edge counts,
// enumerating edge subsets of a small regular graph directly.
struct BruteMarginals {
  std::map<Triple, Rational> q;
  std::map<Triple, RationalVector> e, f;
};

BruteMarginals brute_marginals(const Graph& g, const Rational& x) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int d = *regular_degree(g);
  std::map<Triple, Rational> q;
  std::map<Triple, RationalVector> e, f;
  Rational z;
  for (std::uint32_t h = 0; h < (1U << m); ++h) {
    std::uint64_t cover = 0;
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (!((h >> a) & 1U)) continue;
      const std::uint64_t ends = (1ULL << edges[a].first) | (1ULL << edges[a].second);
      ok = (cover & ends) == 0;
      cover |= ends;
    }
    if (!ok) continue;
    const Rational w = pow(x, std::popcount(h));
    z += w;
    // Vertices covered by H with edge b removed.
    auto covered_without = [&](int b) {
      std::uint64_t c = 0;
      for (int a = 0; a < m; ++a)
        if (a != b && ((h >> a) & 1U)) c |= (1ULL << edges[a].first) | (1ULL << edges[a].second);
      return c;
    };
    auto edge_index = [&](int a, int b) {
      for (int c = 0; c < m; ++c)
        if ((edges[c].first == a && edges[c].second == b) || (edges[c].first == b && edges[c].second == a)) return c;
      return -1;
    };
    auto uncovered_count = [&](int u, int skip) {
      int n = 0;
      for (int y = 0; y < g.vertex_count(); ++y) {
        if (y == skip || !g.has_edge(u, y)) continue;
        const int b = edge_index(u, y);
        const std::uint64_t c = covered_without(b);
        n += !((c >> u) & 1U) && !((c >> y) & 1U);
      }
      return n;
    };
    for (const auto& [a, b] : edges) {
      for (int side = 0; side < 2; ++side) {
        const int u = side ? b : a, v = side ? a : b;
        std::uint64_t outside = 0;
        for (int c = 0; c < m; ++c) {
          if (!((h >> c) & 1U)) continue;
          const auto [p, r] = edges[c];
          if (p == u || p == v || r == u || r == v) continue;
          outside |= (1ULL << p) | (1ULL << r);
        }
        Triple tr;
        for (int y = 0; y < g.vertex_count(); ++y) {
          if (y == u || y == v || ((outside >> y) & 1U)) continue;
          const bool left = g.has_edge(u, y), right = g.has_edge(v, y);
          if (left && right) ++tr.k;
          else if (left) ++tr.i;
          else if (right) ++tr.j;
        }
        q[tr] += w;
        auto& ev = e[tr];
        auto& fv = f[tr];
        ev.resize(static_cast<std::size_t>(d));
        fv.resize(static_cast<std::size_t>(d));
        ev[static_cast<std::size_t>(uncovered_count(u, v))] += w;
        for (int y = 0; y < g.vertex_count(); ++y)
          if (y != v && g.has_edge(u, y)) fv[static_cast<std::size_t>(uncovered_count(u, y))] += w;
      }
    }
  }
  BruteMarginals out;
  for (auto& [tr, mass] : q) {
    for (auto& p : e[tr]) p /= mass;
    for (auto& p : f[tr]) p /= mass * Rational(d - 1);
    out.q[tr] = mass / (z * Rational(2 * m));
  }
  out.e = std::move(e);
  out.f = std::move(f);
  return out;
}

TEST(Gamma, FormulasMatchBruteForceConditionals) {
  const std::pair<const char*, Graph> graphs[] = {
      {"K3", complete(3)}, {"K4", complete(4)},  {"C6", cycle(6)},         {"K2,2", complete_bipartite(2)},
      {"K3,3", complete_bipartite(3)}, {"prism3", prism(3)}, {"Q3", hypercube(3)}, {"petersen", petersen()}};
  for (const auto& [name, g] : graphs) {
    const int d = *regular_degree(g);
    for (const auto& x : {Rational(1), Rational(2, 3)}) {
      const auto brute = brute_marginals(g, x);
      const auto emp = empirical_triple_distribution(g, x);
      EXPECT_EQ(emp.q, brute.q) << name;
      for (const auto& [tr, mass] : brute.q) {
        EXPECT_EQ(brute.e.at(tr), gamma_e(tr, x, d)) << name << " " << tr.str();
        EXPECT_EQ(brute.f.at(tr), gamma_f(tr, x, d)) << name << " " << tr.str();
        EXPECT_EQ(emp.gamma_e.at(tr), brute.e.at(tr)) << name << " " << tr.str();
        EXPECT_EQ(emp.gamma_f.at(tr), brute.f.at(tr)) << name << " " << tr.str();
      }
    }
  }
}

TEST(MatchingPrimal, Examples) {
  EXPECT_EQ(solve(build_primal(2, Rational(1))).value, Rational(2, 7));
  EXPECT_EQ(solve(build_primal(3, Rational(1))).value, Rational(7, 34));
  EXPECT_EQ(edge_occupancy(complete_bipartite(2), Rational(1)), Rational(2, 7));
}

TEST(MatchingPrimal, GridOptimumSupportAndDuals) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& x : kGrid) {
      const auto lp = build_primal(d, x);
      const auto sol = solve(lp);
      ASSERT_EQ(sol.status, LPStatus::kOptimal);
      const Rational expected = x * kdd_matching_poly(d - 1).eval(x) / kdd_matching_poly(d).eval(x);
      EXPECT_EQ(sol.value, expected);
      EXPECT_EQ(sol.value, edge_occupancy(complete_bipartite(d), x));
      const auto triples = enumerate_triples(d);
      for (std::size_t c = 0; c < triples.size(); ++c) {
        if (sol.primal[c].is_zero()) continue;
        EXPECT_TRUE(triples[c].i == triples[c].j && triples[c].k == 0) << triples[c].str();
      }
      const auto dv = dual_variables(d, x);
      EXPECT_EQ(dv.optimum, sol.value);
      RationalVector dual{dv.optimum};
      for (int t = 0; t + 1 < d; ++t) dual.push_back(dv.at(t));
      const auto rep = check_dual_feasible(lp, dual);
      EXPECT_TRUE(rep.feasible);
      EXPECT_EQ(rep.dual_objective, sol.value);
    }
  }
}

TEST(MatchingDual, Examples) {
  const auto two = dual_variables(2, Rational(1));
  EXPECT_EQ(two.at(1), Rational(0));
  EXPECT_EQ(two.at(0), Rational(2, 7));
  EXPECT_EQ(two.optimum, Rational(2, 7));
  const auto three = dual_variables(3, Rational(1));
  for (int i = 0; i <= 2; ++i) EXPECT_TRUE(equality_residual(i, three, Rational(1), 3).is_zero()) << i;
  EXPECT_THROW(dual_variables(3, Rational(0)), DomainError);
}

TEST(FFunction, Examples) {
  const auto dv2 = dual_variables(2, Rational(1));
  EXPECT_EQ(f_definition(1, dv2, Rational(1), 2), Rational(1, 7));
  EXPECT_EQ(f_explicit(1, Rational(1), 2), Rational(1, 7));
  const auto dv3 = dual_variables(3, Rational(1));
  EXPECT_EQ(f_definition(2, dv3, Rational(1), 3), Rational(4, 17));
  EXPECT_EQ(f_explicit(2, Rational(1), 3), Rational(4, 17));
  EXPECT_EQ(f_explicit(0, Rational(1), 3), Rational(0));
  EXPECT_THROW(f_explicit(3, Rational(1), 3), DomainError);
  EXPECT_LT(f_explicit(1, Rational(1), 3), f_explicit(2, Rational(1), 3));
}

TEST(FFunction, IdentitiesAcrossGrid) {
  for (int d = 2; d <= 12; ++d)
    for (const auto& x : kGrid) {
      const auto tab = f_table(d, x);
      EXPECT_TRUE(tab.ok()) << "d=" << d << " " << (tab.failures.empty() ? "" : tab.failures.front());
      EXPECT_EQ(tab.definition, tab.explicit_form);
    }
  const auto ten = check_monotone_f(10, Rational(1, 2));
  EXPECT_TRUE(ten.strictly_increasing);
  EXPECT_TRUE(ten.r_positive);
  EXPECT_EQ(kdd_matching_poly(2).eval(Rational(1)), Rational(7));
  EXPECT_EQ(kdd_matching_poly(1).eval(Rational(1)), Rational(2));
}

TEST(MatchingDual, ConstraintExamples) {
  const auto two = check_dual_constraints(2, Rational(1));
  const auto dv = dual_variables(2, Rational(1));
  EXPECT_EQ(l_value({0, 1, 0}, dv, Rational(1), 2), Rational(1, 7));
  const auto dv3 = dual_variables(3, Rational(1));
  EXPECT_GT(l_value({0, 0, 1}, dv3, Rational(1), 3).sign(), 0);
  EXPECT_TRUE(two.report.valid());
}

TEST(MatchingDual, CertificateAcrossGrid) {
  for (int d = 2; d <= 7; ++d)
    for (const auto& x : kGrid) {
      const auto cert = evaluate_dual_certificate(d, x);
      EXPECT_TRUE(cert.report.valid()) << "d=" << d << " " << (cert.report.failures.empty() ? "" : cert.report.failures.front());
      EXPECT_TRUE(cert.equalities_hold);
      EXPECT_TRUE(cert.telescoping_holds);
      for (const auto& tc : cert.triples) {
        const bool eq = tc.triple.i == tc.triple.j && tc.triple.k == 0;
        EXPECT_EQ(tc.l.is_zero(), eq) << tc.triple.str();
        if (!eq) {
          EXPECT_GT(tc.l.sign(), 0) << tc.triple.str();
        }
        EXPECT_EQ(tc.dual2, x * tc.l);
        EXPECT_EQ(Rational(2 * (d - 1)) * (x + m_ijk(tc.triple).eval(x)) * tc.slack, tc.dual2);
      }
    }
}

TEST(MatchingDual, CorruptedFormulaIsCaught) {
  const auto cert = evaluate_dual_certificate(3, Rational(1), corrupted_gamma_f());
  EXPECT_FALSE(cert.report.valid());
  EXPECT_THROW(check_dual_constraints(3, Rational(1), corrupted_gamma_f()), CertificateFailure);
}

TEST(Laguerre, Identity) {
  for (int d = 2; d <= 50; ++d) EXPECT_TRUE(laguerre_check(d)) << d;
  // d = 2 by hand.
  const IntPolynomial lhs = IntPolynomial{1, 4, 2} - IntPolynomial{1, 3} * IntPolynomial{1, 1} + IntPolynomial{0, 0, 1};
  EXPECT_TRUE(lhs.is_zero());
}

TEST(EmpiricalTriples, Examples) {
  const auto kdd = empirical_triple_distribution(complete_bipartite(2), Rational(1));
  std::set<Triple> support;
  for (const auto& [tr, mass] : kdd.q) support.insert(tr);
  EXPECT_EQ(support, (std::set<Triple>{{0, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(kdd.objective, Rational(2, 7));

  const auto k3 = empirical_triple_distribution(complete(3), Rational(1));
  EXPECT_TRUE(k3.q.count(Triple{0, 0, 1}));
  for (const auto& r : primal_residuals(k3, Rational(1))) EXPECT_TRUE(r.is_zero());

  const auto c6 = empirical_triple_distribution(cycle(6), Rational(1));
  EXPECT_EQ(c6.objective, Rational(5, 18));
  EXPECT_THROW(empirical_triple_distribution(path(3), Rational(1)), DomainError);
  EXPECT_THROW(empirical_triple_distribution(complete(8), Rational(1)), CapabilityError);
}

TEST(EmpiricalTriples, CorpusFeasibleAndBounded) {
  for (const auto& entry : bundled_corpus()) {
    const Graph& g = entry.graph;
    const auto d = regular_degree(g);
    if (!d || *d < 2 || g.edge_count() > 18) continue;
    const Rational x(3, 2);
    const auto emp = empirical_triple_distribution(g, x);
    for (const auto& r : primal_residuals(emp, x)) EXPECT_TRUE(r.is_zero()) << entry.name;
    EXPECT_EQ(emp.objective, edge_occupancy(g, x)) << entry.name;
    EXPECT_LE(emp.objective, kdd_edge_occupancy(*d, x)) << entry.name;
    EXPECT_EQ(emp.objective == kdd_edge_occupancy(*d, x), is_kdd_union(g, *d)) << entry.name;
  }
}

TEST(EmpiricalTriples, CountsReusedAcrossFugacities) {
  const Graph g = prism(4);
  const auto counts = count_triples(g);
  for (const auto& x : {Rational(1, 3), Rational(1), Rational(5, 2)}) {
    const auto a = empirical_triple_distribution(counts, x);
    const auto b = empirical_triple_distribution(g, x);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.gamma_e, b.gamma_e);
    EXPECT_EQ(a.gamma_f, b.gamma_f);
    EXPECT_EQ(a.objective, edge_occupancy(g, x));
  }
}

TEST(EmpiricalTriples, DenseGraphWithRaisedLimit) {
  const Graph g = complete(9);
  const auto counts = count_triples(g, 36);
  // m_k(K_9) = 9! / (k! (9-2k)! 2^k)
  const std::vector<std::uint64_t> expect{1, 36, 378, 1260, 945};
  EXPECT_EQ(counts.sizes, expect);
  const Rational x(3, 2);
  const auto emp = empirical_triple_distribution(counts, x);
  for (const auto& r : primal_residuals(emp, x)) EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(emp.objective, edge_occupancy(g, x));
  for (const auto& [tr, v] : emp.gamma_f) EXPECT_EQ(v, gamma_f(tr, x, 8)) << tr.str();
}

}  // namespace
