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

#include <set>

#include "occfrac/corpus.hpp"
#include "occfrac/families.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/hardcore_lp.hpp"
#include "occfrac/predicates.hpp"
#include "oracles.hpp"

namespace {

using namespace occfrac;
using namespace occfrac::hardcore;

const Rational kGrid[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};

TEST(HardcoreConfigs, CountsMatchClassOrbitCounting) {
  std::size_t cumulative = 1;  // the empty graph
  for (int d = 1; d <= 5; ++d) {
    cumulative += oracle::class_count(d);
    if (d < kMinDegree) continue;
    EXPECT_EQ(enumerate_configs(d).size(), cumulative) << "d=" << d;
  }
  EXPECT_EQ(enumerate_configs(2).size(), 4U);
  EXPECT_EQ(enumerate_configs(3).size(), 8U);
  EXPECT_EQ(enumerate_configs(4).size(), 19U);
}

TEST(HardcoreConfigs, EveryLabeledGraphHasExactlyOneClass) {
  const int d = 4;
  const auto& configs = enumerate_configs(d);
  std::set<CanonicalKey> keys;
  for (const auto& c : configs) keys.insert(c.key);
  EXPECT_EQ(keys.size(), configs.size());
  for (int n = 0; n <= d; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      EXPECT_TRUE(keys.count(canonical_key(oracle::from_mask(n, m))));
    }
  }
}

TEST(HardcoreConfigs, OrderAndSpecialValues) {
  const auto& configs = enumerate_configs(3);
  for (std::size_t i = 1; i < configs.size(); ++i) {
    const auto& a = configs[i - 1];
    const auto& b = configs[i];
    EXPECT_TRUE(a.vertex_count() < b.vertex_count() || (a.vertex_count() == b.vertex_count() && a.key < b.key));
  }
  const Rational x(1, 3);
  const auto& empty = configs[empty_index(3)];
  EXPECT_EQ(empty.vertex_count(), 0);
  EXPECT_EQ(empty.a(x), Rational(1));
  EXPECT_EQ(empty.b(x, 3), Rational(0));
  const auto& iso = configs[isolated_index(3)];
  EXPECT_EQ(iso.a(x), pow(Rational(4, 3), -3));
  EXPECT_EQ(iso.b(x, 3), Rational(1));
  for (const auto& c : configs) {
    EXPECT_GT(c.a(x).sign(), 0);
    EXPECT_LE(c.a(x), Rational(1));
  }
}

TEST(HardcoreConfigs, DegreeRange) {
  EXPECT_THROW(enumerate_configs(1), CapabilityError);
  EXPECT_THROW(enumerate_configs(8), CapabilityError);
  EXPECT_THROW(build_primal(3, Rational(0)), DomainError);
}

TEST(HardcorePrimal, ExampleAtDegreeTwo) {
  const auto lp = build_primal(2, Rational(1));
  const auto sol = solve(lp);
  ASSERT_EQ(sol.status, LPStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(2, 7));
  EXPECT_EQ(sol.primal[empty_index(2)], Rational(3, 7));
  EXPECT_EQ(sol.primal[isolated_index(2)], Rational(4, 7));
  const auto [p0, p1] = two_point_solution(2, Rational(1));
  EXPECT_EQ(p0, Rational(3, 7));
  EXPECT_EQ(p1, Rational(4, 7));
  EXPECT_EQ(solve(build_primal(3, Rational(1))).value, Rational(4, 15));
}

TEST(HardcorePrimal, GridOptimumAndSupport) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& x : kGrid) {
      const auto lp = build_primal(d, x);
      const auto sol = solve(lp);
      ASSERT_EQ(sol.status, LPStatus::kOptimal);
      const Rational expected = x * pow(Rational(1) + x, d - 1) / (Rational(2) * pow(Rational(1) + x, d) - Rational(1));
      EXPECT_EQ(sol.value, expected);
      EXPECT_EQ(sol.value, kdd_occupancy(d, x));
      EXPECT_EQ(occupancy(complete_bipartite(d), x), expected);
      std::set<std::size_t> support;
      for (std::size_t j = 0; j < sol.primal.size(); ++j)
        if (!sol.primal[j].is_zero()) support.insert(j);
      EXPECT_EQ(support, (std::set<std::size_t>{empty_index(d), isolated_index(d)}));
      // The two-point distribution attains the K_{d,d} value.
      const auto [p0, p1] = two_point_solution(d, x);
      EXPECT_EQ(p0, (Rational(1) - pow(Rational(1) + x, -d)) / (Rational(2) - pow(Rational(1) + x, -d)));
      EXPECT_EQ(lp.objective[empty_index(d)] * p0 + lp.objective[isolated_index(d)] * p1, expected);
    }
  }
}

TEST(HardcoreDual, ExampleAtDegreeTwo) {
  const auto [l1, l2] = dual_values(2, Rational(1));
  EXPECT_EQ(l1, Rational(8, 7));
  EXPECT_EQ(l2, Rational(-1, 7));
  const auto rep = dual_certificate(2, Rational(1));
  EXPECT_EQ(rep.optimum, Rational(2, 7));
  EXPECT_EQ(rep.tight_set.size(), 2U);
  EXPECT_TRUE(rep.feasible());
}

TEST(HardcoreDual, DegreeThreeHasSixStrictSlacks) {
  const auto rep = dual_certificate(3, Rational(1));
  EXPECT_EQ(rep.optimum, Rational(4, 15));
  int strict = 0;
  for (const auto& s : rep.slacks) strict += s.slack.sign() > 0;
  EXPECT_EQ(strict, 6);
}

TEST(HardcoreDual, GridMatchesSolverAndCheckDualFeasible) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& x : kGrid) {
      const auto rep = evaluate_dual_certificate(d, x);
      EXPECT_TRUE(rep.valid()) << (rep.failures.empty() ? "" : rep.failures.front());
      const auto lp = build_primal(d, x);
      const auto sol = solve(lp);
      EXPECT_EQ(rep.optimum, sol.value);
      // The LP objective carries the factor x/(2(1+x)); the closed-form
      // duals are quoted without it.
      const Rational scale = x / (Rational(2) * (Rational(1) + x));
      const auto [l1, l2] = dual_values(d, x);
      EXPECT_EQ(sol.dual, (RationalVector{scale * l1, scale * l2}));
      const auto check = check_dual_feasible(lp, {scale * l1, scale * l2});
      EXPECT_TRUE(check.feasible);
      for (std::size_t j = 0; j < check.slack.size(); ++j) {
        const bool tight = j == empty_index(d) || j == isolated_index(d);
        EXPECT_EQ(check.tight[j], tight);
        EXPECT_EQ(check.slack[j], scale * rep.slacks[j].slack);
      }
    }
  }
}

TEST(IndFact, Examples) {
  const auto r = check_ind_fact(complete(2), 2, Rational(1));
  EXPECT_EQ(r.lhs, Rational(1));
  EXPECT_EQ(r.rhs, Rational(4, 3));
  EXPECT_TRUE(r.strict());
  const auto iso = check_ind_fact(Graph(3), 3, Rational(1));
  EXPECT_EQ(iso.lhs, iso.rhs);
  EXPECT_TRUE(check_ind_fact(complete(3), 3, Rational(1)).strict());
  EXPECT_THROW(check_ind_fact(Graph(0), 3, Rational(1)), DomainError);
  EXPECT_THROW(check_ind_fact(Graph(4), 3, Rational(1)), DomainError);
}

TEST(IndFact, StrictOffTheTightSet) {
  for (int d = 2; d <= 5; ++d) {
    const auto& configs = enumerate_configs(d);
    for (std::size_t i = 0; i < configs.size(); ++i) {
      if (i == empty_index(d) || i == isolated_index(d)) continue;
      for (const auto& x : kGrid) EXPECT_TRUE(check_ind_fact(configs[i].graph, d, x).strict()) << configs[i].id();
    }
  }
}

TEST(SkCoefficients, Examples) {
  for (int d = 2; d <= 5; ++d)
    for (const auto& s : s_k_coefficients(Graph(d), d)) EXPECT_EQ(s, 0);
  const auto k2 = s_k_coefficients(complete(2), 2);
  EXPECT_EQ(k2[0], 0);
  EXPECT_EQ(k2[1], 0);
  const auto k3 = s_k_coefficients(complete(3), 3);
  EXPECT_TRUE(std::any_of(k3.begin(), k3.end(), [](const BigInt& s) { return s > 0; }));
}

TEST(SkCoefficients, NonnegativeAndMatchBruteForceExpansion) {
  for (int d = 2; d <= 5; ++d) {
    const std::vector<long> t = oracle::independent_set_counts(Graph(d));
    for (const auto& c : enumerate_configs(d)) {
      const std::vector<long> r = oracle::independent_set_counts(c.graph);
      // (sum_k k t_k x^k)(sum_{k>=1} r_k x^k) - (sum_k k r_k x^k)(sum_{k>=1} t_k x^k)
      std::vector<long> brute(static_cast<std::size_t>(2 * d + 1), 0);
      for (std::size_t a = 1; a < t.size(); ++a)
        for (std::size_t b = 1; b < r.size(); ++b)
          brute[a + b] += static_cast<long>(a) * t[a] * r[b] - static_cast<long>(b) * r[b] * t[a];
      const auto s = s_k_coefficients(c.graph, d);
      ASSERT_EQ(s.size(), static_cast<std::size_t>(2 * d));
      EXPECT_EQ(s, s_k_by_expansion(c.graph, d));
      bool some_positive = false;
      for (int k = 1; k <= 2 * d; ++k) {
        EXPECT_EQ(s[static_cast<std::size_t>(k - 1)], brute[static_cast<std::size_t>(k)]) << c.id() << " k=" << k;
        EXPECT_GE(s[static_cast<std::size_t>(k - 1)], 0);
        some_positive = some_positive || s[static_cast<std::size_t>(k - 1)] > 0;
      }
      // P_C - 1 vanishes for the empty configuration, so every s_k does too.
      EXPECT_EQ(some_positive, r != t && c.vertex_count() > 0) << c.id();
    }
  }
}

TEST(TriangleFree, Examples) {
  const auto two = build_triangle_free_lp(2, Rational(1));
  EXPECT_EQ(two.occupancy_bound, Rational(2, 7));
  EXPECT_EQ(two.support, (std::vector<int>{0, 2}));
  EXPECT_EQ(build_triangle_free_lp(3, Rational(1)).occupancy_bound, Rational(4, 15));
  for (int d = 2; d <= 6; ++d) {
    for (const auto& x : kGrid) {
      const auto r = build_triangle_free_lp(d, x);
      EXPECT_EQ(r.occupancy_bound, kdd_occupancy(d, x));
      EXPECT_EQ(r.support, (std::vector<int>{0, d}));
    }
  }
}

TEST(TriangleFree, CycleSixDistributionIsFeasible) {
  const Rational x(1);
  const auto dist = uncovered_neighbor_distribution(cycle(6), x);
  const auto lp = triangle_free_program(2, x);
  ASSERT_EQ(dist.size(), lp.column_count());
  for (std::size_t r = 0; r < lp.row_count(); ++r) {
    Rational lhs;
    for (std::size_t j = 0; j < dist.size(); ++j) lhs += lp.rows[r][j] * dist[j];
    EXPECT_EQ(lhs, lp.rhs[r]);
  }
  Rational value;
  for (std::size_t j = 0; j < dist.size(); ++j) value += lp.objective[j] * dist[j];
  EXPECT_EQ(value * x / (Rational(2) * (Rational(1) + x)), Rational(5, 18));
  EXPECT_LT(Rational(5, 18), Rational(2, 7));
}

TEST(EmpiricalConfigs, Examples) {
  const auto kdd = empirical_config_distribution(complete_bipartite(2), Rational(1));
  EXPECT_EQ(kdd.column_mass[empty_index(2)], Rational(3, 7));
  EXPECT_EQ(kdd.column_mass[isolated_index(2)], Rational(4, 7));
  EXPECT_EQ(kdd.support(enumerate_configs(2)).size(), 2U);

  const auto c6 = empirical_config_distribution(cycle(6), Rational(1));
  EXPECT_TRUE(c6.constraint_residual.is_zero());
  EXPECT_EQ(c6.objective, Rational(5, 18));

  const auto pet = empirical_config_distribution(petersen(), Rational(1));
  EXPECT_TRUE(pet.constraint_residual.is_zero());
  EXPECT_LT(pet.objective, Rational(4, 15));
  EXPECT_EQ(pet.objective, occupancy(petersen(), Rational(1)));

  EXPECT_THROW(empirical_config_distribution(path(4), Rational(1)), DomainError);
  EXPECT_THROW(empirical_config_distribution(cycle(16), Rational(1)), CapabilityError);
}

TEST(EmpiricalConfigs, CorpusFeasibleAndBounded) {
  for (const auto& entry : bundled_corpus()) {
    const Graph& g = entry.graph;
    const auto d = regular_degree(g);
    if (!d || *d < kMinDegree || *d > 5 || g.vertex_count() > 12) continue;
    for (const auto& x : {Rational(1, 2), Rational(2)}) {
      const auto emp = empirical_config_distribution(g, x);
      EXPECT_EQ(emp.total_mass, Rational(1)) << entry.name;
      EXPECT_TRUE(emp.constraint_residual.is_zero()) << entry.name;
      const Rational occ = occupancy(g, x);
      EXPECT_EQ(emp.alpha_uncovered, occ) << entry.name;
      EXPECT_EQ(emp.alpha_neighbors, occ) << entry.name;
      EXPECT_EQ(emp.objective, occ) << entry.name;
      EXPECT_LE(emp.objective, kdd_occupancy(*d, x)) << entry.name;
      EXPECT_EQ(emp.objective == kdd_occupancy(*d, x), is_kdd_union(g, *d)) << entry.name;
    }
  }
}

TEST(EmpiricalConfigs, HighDegreeSkipsColumns) {
  for (int n : {9, 10}) {
    const Graph g = complete(n);
    for (const auto& x : {Rational(1), Rational(3)}) {
      const auto emp = empirical_config_distribution(g, x);
      EXPECT_EQ(emp.d, n - 1);
      EXPECT_TRUE(emp.column_mass.empty());
      EXPECT_EQ(emp.total_mass, Rational(1));
      EXPECT_TRUE(emp.constraint_residual.is_zero());
      EXPECT_EQ(emp.objective, occupancy(g, x));
      EXPECT_LT(emp.objective, kdd_occupancy(n - 1, x));
    }
  }
}

TEST(EmpiricalConfigs, ColumnMassSumsToOne) {
  for (const Graph& g : {cycle(7), prism(5), hypercube(3)}) {
    const auto emp = empirical_config_distribution(g, Rational(2, 3));
    Rational sum;
    for (const auto& m : emp.column_mass) sum += m;
    EXPECT_EQ(sum, Rational(1));
  }
}

}  // namespace
