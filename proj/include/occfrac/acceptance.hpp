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

// The acceptance suite: ten end-to-end checks, shared by the acceptance test
// binary and `occfrac selftest`.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "occfrac/bounds.hpp"
#include "occfrac/corpus.hpp"
#include "occfrac/enumeration.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/hardcore_lp.hpp"
#include "occfrac/matching_lp.hpp"
#include "occfrac/predicates.hpp"
#include "occfrac/rational.hpp"
#include "occfrac/simplex.hpp"

namespace occfrac::acceptance {

struct Options {
  bool quick = false;
  matching::TripleFormulas formulas;  // replaced by the mutation self-test
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> failures;
  double seconds = 0;
};

namespace detail {

inline CriterionResult start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

inline std::vector<Rational> lambda_grid(const Options& o) {
  if (o.quick) return {Rational(1)};
  return {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
}

inline int max_degree(const Options& o) { return o.quick ? 3 : 5; }

inline std::string at(int d, const Rational& lambda) {
  return "d=" + std::to_string(d) + " lambda=" + lambda.str();
}

// Failure lists are capped so one broken formula does not flood the report.
class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void fail(std::string msg) {
    if (r_.failures.size() < 20) r_.failures.push_back(std::move(msg));
    else if (r_.failures.size() == 20) r_.failures.push_back("(further failures omitted)");
    any_ = true;
  }
  void check(bool ok, const std::function<std::string()>& msg) {
    if (!ok) fail(msg());
  }
  bool any() const { return any_; }

 private:
  CriterionResult& r_;
  bool any_ = false;
};

inline std::vector<CorpusEntry> small_regular_corpus(const Options& o) {
  std::vector<CorpusEntry> out;
  const int limit = o.quick ? 8 : 12;
  for (auto& e : bundled_corpus()) {
    if (e.graph.vertex_count() <= limit && regular_degree(e.graph).value_or(0) >= 1) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline CriterionResult criterion_1(const Options& o) {
  CriterionResult r = detail::start(1, "hard-core LP optimum equals the K_{d,d} occupancy with support {empty, d isolated vertices}");
  detail::Recorder rec(r);
  for (int d = 2; d <= detail::max_degree(o); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const LPSolution sol = solve(hardcore::build_primal(d, lam));
      if (sol.status != LPStatus::kOptimal) {
        rec.fail(detail::at(d, lam) + ": LP status " + to_string(sol.status));
        continue;
      }
      const Rational expect = hardcore::kdd_occupancy(d, lam);
      rec.check(sol.value == expect, [&] {
        return detail::at(d, lam) + ": optimum " + sol.value.str() + " != " + expect.str();
      });
      std::set<std::size_t> support;
      for (std::size_t j = 0; j < sol.primal.size(); ++j)
        if (!sol.primal[j].is_zero()) support.insert(j);
      const std::set<std::size_t> want{hardcore::empty_index(d), hardcore::isolated_index(d)};
      rec.check(support == want, [&] { return detail::at(d, lam) + ": unexpected optimal support"; });
    }
  }
  return r;
}

inline CriterionResult criterion_2(const Options& o) {
  CriterionResult r = detail::start(2, "hard-core dual certificate is feasible, tight exactly on the optimal support");
  detail::Recorder rec(r);
  for (int d = 2; d <= detail::max_degree(o); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const CertificateReport rep = hardcore::evaluate_dual_certificate(d, lam);
      for (const auto& f : rep.failures) rec.fail(detail::at(d, lam) + ": " + f);
      // Independent path: the same point priced against the assembled LP.
      const LinearProgram lp = hardcore::build_primal(d, lam);
      const Rational scale = lam / (Rational(2) * (Rational(1) + lam));
      const auto [l1, l2] = hardcore::dual_values(d, lam);
      const DualSlackReport dual = check_dual_feasible(lp, {scale * l1, scale * l2});
      rec.check(dual.feasible, [&] { return detail::at(d, lam) + ": dual point infeasible for the LP"; });
      rec.check(std::count(dual.tight.begin(), dual.tight.end(), true) == 2,
                [&] { return detail::at(d, lam) + ": tight set is not of size 2"; });
      rec.check(dual.dual_objective == hardcore::kdd_occupancy(d, lam),
                [&] { return detail::at(d, lam) + ": dual objective differs from the optimum"; });
    }
  }
  return r;
}

inline CriterionResult criterion_3(const Options& o) {
  CriterionResult r = detail::start(3, "matching LP optimum equals the K_{d,d} edge occupancy");
  detail::Recorder rec(r);
  for (int d = 2; d <= detail::max_degree(o); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const LPSolution sol = solve(matching::build_primal(d, lam, o.formulas));
      if (sol.status != LPStatus::kOptimal) {
        rec.fail(detail::at(d, lam) + ": LP status " + to_string(sol.status));
        continue;
      }
      const Rational closed = matching::kdd_edge_occupancy(d, lam);
      const Rational direct = edge_occupancy(complete_bipartite(d), lam);
      rec.check(sol.value == closed && closed == direct, [&] {
        return detail::at(d, lam) + ": optimum " + sol.value.str() + ", closed form " + closed.str() +
               ", edge occupancy " + direct.str();
      });
    }
  }
  return r;
}

inline CriterionResult criterion_4(const Options& o) {
  CriterionResult r = detail::start(4, "matching dual certificate: equalities exact, L > 0 off (i,i,0), F_d forms agree");
  detail::Recorder rec(r);
  for (int d = 2; d <= detail::max_degree(o); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const auto cert = matching::evaluate_dual_certificate(d, lam, o.formulas);
      for (const auto& f : cert.report.failures) rec.fail(detail::at(d, lam) + ": " + f);
    }
  }
  for (int d = 2; d <= (o.quick ? 6 : 12); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const auto dv = matching::dual_variables(d, lam);
      for (int t = 1; t <= d - 1; ++t) {
        rec.check(matching::f_definition(t, dv, lam, d) == matching::f_explicit(t, lam, d),
                  [&] { return detail::at(d, lam) + ": F_d(" + std::to_string(t) + ") forms differ"; });
      }
    }
  }
  return r;
}

inline CriterionResult criterion_5(const Options& o) {
  CriterionResult r = detail::start(5, "Laguerre identity, closed form of F_d(d-1), and the F_d recurrence");
  detail::Recorder rec(r);
  for (int d = 2; d <= (o.quick ? 20 : 50); ++d)
    rec.check(matching::laguerre_check(d), [&] { return "Laguerre identity fails at d=" + std::to_string(d); });
  for (int d = 2; d <= (o.quick ? 6 : 12); ++d) {
    for (const auto& lam : detail::lambda_grid(o)) {
      const auto tab = matching::f_table(d, lam);
      rec.check(tab.last_value_matches, [&] { return detail::at(d, lam) + ": F_d(d-1) closed form"; });
      rec.check(tab.recurrence_holds, [&] { return detail::at(d, lam) + ": F_d recurrence"; });
      rec.check(tab.strictly_increasing && tab.r_positive && tab.r_sum_form_agrees && tab.crude_bound_holds,
                [&] { return detail::at(d, lam) + ": monotonicity checks"; });
    }
  }
  return r;
}

inline CriterionResult criterion_6(const Options& o) {
  CriterionResult r = detail::start(6, "corpus occupancies are at most the K_{d,d} values, with equality only for unions of K_{d,d}");
  detail::Recorder rec(r);
  for (const auto& e : detail::small_regular_corpus(o)) {
    const int d = *regular_degree(e.graph);
    const bool extremal = is_kdd_union(e.graph, d);
    for (const auto& lam : detail::lambda_grid(o)) {
      const Rational a = occupancy(e.graph, lam), ak = hardcore::kdd_occupancy(d, lam);
      const Rational m = edge_occupancy(e.graph, lam), mk = matching::kdd_edge_occupancy(d, lam);
      rec.check(extremal ? a == ak : a < ak,
                [&] { return e.name + " lambda=" + lam.str() + ": occupancy " + a.str() + " vs " + ak.str(); });
      rec.check(extremal ? m == mk : m < mk, [&] {
        return e.name + " lambda=" + lam.str() + ": edge occupancy " + m.str() + " vs " + mk.str();
      });
    }
  }
  return r;
}

inline CriterionResult criterion_7(const Options& o) {
  CriterionResult r = detail::start(7, "vertex-transitive bipartite graphs beat the tree occupancy (tolerance 1e-9)");
  detail::Recorder rec(r);
  const Rational tol(1, 1000000000);
  for (const auto& e : transitive_bipartite_corpus()) {
    if (o.quick && e.graph.vertex_count() > 8) continue;
    for (const auto& lam : detail::lambda_grid(o)) {
      const auto res = bounds::verify_lower_bound(e.graph, lam, tol);
      rec.check(res.verdict == Verdict::kPass, [&] {
        return e.name + " lambda=" + lam.str() + ": " + to_string(res.verdict) + " (occupancy " +
               res.occupancy.str() + ")";
      });
    }
  }
  return r;
}

inline CriterionResult criterion_8(const Options& o) {
  CriterionResult r = detail::start(8, "same-side correlation inequalities hold with the right strictness");
  detail::Recorder rec(r);
  std::mt19937 rng(20261016);
  for (const auto& e : detail::small_regular_corpus(o)) {
    const auto sides = bipartition(e.graph);
    if (!sides) continue;
    const int n = e.graph.vertex_count();
    std::vector<std::vector<int>> groups;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((*sides)[static_cast<std::size_t>(u)] == (*sides)[static_cast<std::size_t>(v)]) groups.push_back({u, v});
    std::vector<std::vector<int>> triples;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          const auto s = (*sides)[static_cast<std::size_t>(a)];
          if ((*sides)[static_cast<std::size_t>(b)] == s && (*sides)[static_cast<std::size_t>(c)] == s)
            triples.push_back({a, b, c});
        }
    const std::size_t want = o.quick ? 10 : 100;
    if (triples.size() > want) {
      std::shuffle(triples.begin(), triples.end(), rng);
      triples.resize(want);
    }
    groups.insert(groups.end(), triples.begin(), triples.end());
    for (const auto& lam : detail::lambda_grid(o)) {
      for (const auto& grp : groups) {
        for (auto mode : {bounds::FkgMode::kOccupied, bounds::FkgMode::kUncovered}) {
          const auto res = bounds::fkg_check(e.graph, grp, lam, mode);
          rec.check(res.verdict == Verdict::kPass, [&] {
            std::ostringstream os;
            os << e.name << " lambda=" << lam << (mode == bounds::FkgMode::kOccupied ? " occupied" : " uncovered")
               << " {";
            for (int v : grp) os << v << ' ';
            os << "}: joint " << res.joint << " product " << res.product;
            return os.str();
          });
        }
      }
    }
  }
  return r;
}

inline CriterionResult criterion_9(const Options& o) {
  CriterionResult r = detail::start(9, "size-k bounds: lampick mode, K_{d,d} variance, counts against H_{d,n}");
  detail::Recorder rec(r);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2 * d; n <= (o.quick ? 12 : 24); n += 2 * d) {
      for (bool match : {false, true}) {
        const IntPolynomial p = match ? bounds::hdn_matching(d, n) : bounds::hdn_independence(d, n);
        const auto dist_ok = bounds::log_concavity_check(p, Rational(1), d);
        rec.check(dist_ok.ok(), [&] { return "log-concavity fails for H_{" + std::to_string(d) + "," + std::to_string(n) + "}"; });
        for (int k = 1; k <= n / 2; ++k) {
          const auto res = bounds::lampick_for_size(p, k);
          rec.check(bounds::exceeds_inverse_two_sqrt(res.mode_probability, n), [&] {
            return std::string(match ? "matchings" : "independent sets") + " H_{" + std::to_string(d) + "," +
                   std::to_string(n) + "} k=" + std::to_string(k) + ": mode " + res.mode_probability.str();
          });
        }
      }
    }
  }
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : detail::lambda_grid(o)) {
      const auto v = bounds::variance_check(d, lam);
      rec.check(v.ok(), [&] { return detail::at(d, lam) + ": variance exceeds d/4"; });
    }
  for (const auto& e : bundled_corpus()) {
    const auto res = bounds::given_size_bound(e.graph);
    for (const auto& f : res.failures) rec.fail(e.name + ": " + f);
  }
  return r;
}

inline CriterionResult criterion_10(const Options& o) {
  CriterionResult r = detail::start(10, "polynomial occupancies match enumeration; empirical distributions are LP-feasible");
  detail::Recorder rec(r);
  const OracleLimits wide{24, 80};
  constexpr int kMatchingEdges = 66;  // K12, the densest corpus graph with n <= 12
  for (const auto& e : detail::small_regular_corpus(o)) {
    const Graph& g = e.graph;
    const int d = *regular_degree(g);
    const ConfigurationSpace hard(g, Model::kHardcore, wide);
    const ConfigurationSpace match(g, Model::kMatching, wide);
    const auto size = [](const Configuration& c) { return static_cast<long>(c.size); };
    const bool triples = d >= 2 && g.edge_count() <= (o.quick ? 20 : kMatchingEdges);
    const auto counts = triples ? matching::count_triples(g, kMatchingEdges) : matching::TripleCounts{};
    for (const auto& lam : detail::lambda_grid(o)) {
      const std::string where = e.name + " lambda=" + lam.str();
      rec.check(occupancy(g, lam) == hard.expectation(size, lam) / Rational(g.vertex_count()),
                [&] { return where + ": occupancy differs from enumeration"; });
      rec.check(edge_occupancy(g, lam) == match.expectation(size, lam) / Rational(g.edge_count()),
                [&] { return where + ": edge occupancy differs from enumeration"; });

      {
        const auto emp = hardcore::empirical_config_distribution(g, lam);
        const Rational a = occupancy(g, lam);
        rec.check(emp.total_mass == Rational(1) && emp.constraint_residual.is_zero(),
                  [&] { return where + ": free-neighbourhood distribution violates the hard-core LP"; });
        rec.check(emp.objective == a && emp.alpha_uncovered == a && emp.alpha_neighbors == a,
                  [&] { return where + ": free-neighbourhood objective differs from occupancy"; });
      }
      if (triples) {
        const auto emp = matching::empirical_triple_distribution(counts, lam);
        const auto res = matching::primal_residuals(emp, lam, o.formulas);
        for (std::size_t t = 0; t < res.size(); ++t) {
          rec.check(res[t].is_zero(), [&] { return where + ": triple distribution violates matching LP row " + std::to_string(t); });
        }
        rec.check(emp.objective == edge_occupancy(g, lam),
                  [&] { return where + ": triple objective differs from edge occupancy"; });
        for (const auto& [tr, v] : emp.gamma_e)
          rec.check(v == o.formulas.gamma_e(tr, lam, d), [&] { return where + ": gamma_e mismatch at triple " + tr.str(); });
        for (const auto& [tr, v] : emp.gamma_f)
          rec.check(v == o.formulas.gamma_f(tr, lam, d), [&] { return where + ": gamma_f mismatch at triple " + tr.str(); });
      }
    }
  }
  return r;
}

using CriterionFn = CriterionResult (*)(const Options&);

inline const std::vector<CriterionFn>& criteria() {
  static const std::vector<CriterionFn> all{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  return all;
}

/// Runs one criterion, timing it and turning exceptions into failures.
/// Criteria with a runtime budget fail when they exceed it.
inline CriterionResult run(CriterionFn fn, int id, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fn(o);
  } catch (const std::exception& ex) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.failures.push_back(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double budget = id == 1 ? 10 : id == 3 ? 60 : id == 5 ? 30 : 0;
  if (budget > 0 && r.seconds > budget) {
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(budget) + " s");
  }
  r.passed = r.failures.empty();
  return r;
}

inline std::vector<CriterionResult> run_all(const Options& o) {
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria().size(); ++i) out.push_back(run(criteria()[i], static_cast<int>(i) + 1, o));
  return out;
}

}  // namespace occfrac::acceptance
