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

// Tree fixed point, correlation inequalities, and counts of independent sets
// and matchings of a given size.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occfrac/enumeration.hpp"
#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/matching_lp.hpp"
#include "occfrac/polynomial.hpp"
#include "occfrac/predicates.hpp"
#include "occfrac/rational.hpp"
#include "occfrac/verdict.hpp"

namespace occfrac::bounds {

// ---------------------------------------------------------------------------
// Infinite d-regular tree.

struct TreeOccupancy {
  int d = 0;
  Rational lambda;
  Rational alpha_low;
  Rational alpha_high;
  Rational tolerance;
};

/// g(a) = a / (x (1 - a)) - ((1 - 2a) / (1 - a))^d, increasing on (0, 1/2).
inline Rational tree_fixed_point_gap(const Rational& a, int d, const Rational& lambda) {
  const Rational one(1);
  return a / (lambda * (one - a)) - pow((one - Rational(2) * a) / (one - a), d);
}

/// Bisection bracket of the occupancy fraction of the d-regular tree.
inline TreeOccupancy tree_occupancy(int d, const Rational& lambda, const Rational& tolerance) {
  if (d < 2) throw DomainError("tree occupancy needs d >= 2");
  ::occfrac::detail::require_positive_fugacity(lambda);
  if (tolerance.sign() <= 0) throw DomainError("tolerance must be positive");
  TreeOccupancy t{d, lambda, Rational(0), Rational(1, 2), tolerance};
  while (t.alpha_high - t.alpha_low > tolerance) {
    const Rational mid = (t.alpha_low + t.alpha_high) / Rational(2);
    const int s = tree_fixed_point_gap(mid, d, lambda).sign();
    if (s == 0) {
      // Exact rational root: shrink to a bracket of width 0 around it.
      t.alpha_low = t.alpha_high = mid;
      break;
    }
    (s < 0 ? t.alpha_low : t.alpha_high) = mid;
  }
  return t;
}

/// (d-1)^{d-1} / (d-2)^d.
inline Rational uniqueness_threshold(int d) {
  if (d < 3) throw DomainError("uniqueness threshold is finite only for d >= 3");
  return Rational(pow(Rational(d - 1), d - 1)) / pow(Rational(d - 2), d);
}

struct LowerBoundResult {
  Verdict verdict = Verdict::kInconclusive;
  Rational occupancy;
  TreeOccupancy tree;
  bool tightened = false;
};

/// Checks occupancy(G) > occupancy of the d-regular tree for a regular,
/// bipartite, vertex-transitive G. Pass `assume_transitive` to skip the
/// (exhaustive) transitivity test on graphs too large for it.
inline LowerBoundResult verify_lower_bound(const Graph& g, const Rational& lambda, const Rational& tolerance,
                                           bool assume_transitive = false) {
  const auto d = regular_degree(g);
  if (!d || *d < 2) throw DomainError("precondition failed: graph is not d-regular with d >= 2");
  if (!is_bipartite(g)) throw DomainError("precondition failed: graph is not bipartite");
  if (!assume_transitive && !is_vertex_transitive(g)) {
    throw DomainError("precondition failed: graph is not vertex-transitive");
  }
  LowerBoundResult r;
  r.occupancy = occupancy(g, lambda);
  auto judge = [&](const TreeOccupancy& t) {
    if (r.occupancy > t.alpha_high) return Verdict::kPass;
    if (r.occupancy < t.alpha_low) return Verdict::kFail;
    return Verdict::kInconclusive;
  };
  r.tree = tree_occupancy(*d, lambda, tolerance);
  r.verdict = judge(r.tree);
  if (r.verdict == Verdict::kInconclusive) {
    r.tightened = true;
    r.tree = tree_occupancy(*d, lambda, tolerance / Rational(16));
    r.verdict = judge(r.tree);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Positive correlation on one side of a bipartite graph.

enum class FkgMode { kOccupied, kUncovered };

struct FkgResult {
  Rational joint;
  Rational product;
  bool strict_expected = false;
  Verdict verdict = Verdict::kFail;
};

inline FkgResult fkg_check(const Graph& g, const std::vector<int>& vertices, const Rational& lambda, FkgMode mode,
                           OracleLimits limits = {}) {
  ::occfrac::detail::require_positive_fugacity(lambda);
  const auto sides = bipartition(g);
  if (!sides) throw DomainError("precondition failed: graph is not bipartite");
  if (vertices.empty()) throw DomainError("precondition failed: no vertices given");
  VertexSet set = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    if ((*sides)[static_cast<std::size_t>(v)] != (*sides)[static_cast<std::size_t>(vertices.front())]) {
      throw DomainError("precondition failed: vertices lie on both sides of the bipartition");
    }
    set |= bit(v);
  }
  const ConfigurationSpace space(g, Model::kHardcore, limits);
  auto region = [&](const Configuration& c) {
    return mode == FkgMode::kOccupied ? c.vertices : space.uncovered(c);
  };
  FkgResult r;
  r.joint = space.probability([&](const Configuration& c) { return (region(c) & set) == set; }, lambda);
  r.product = Rational(1);
  for_each_vertex(set, [&](int v) {
    r.product *= space.probability([&](const Configuration& c) { return ((region(c) >> v) & 1U) != 0; }, lambda);
  });
  for (VertexSet comp : g.components())
    if (popcount(comp & set) >= 2) r.strict_expected = true;
  const bool ok = r.strict_expected ? r.joint > r.product : r.joint == r.product;
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  return r;
}

// ---------------------------------------------------------------------------
// Counts by size.

struct Counts {
  std::vector<BigInt> independent_sets;  // i_k
  std::vector<BigInt> matchings;         // m_k
};

inline Counts counts(const Graph& g) {
  return {independence_poly(g).coefficients(), matching_gen_poly(g).coefficients()};
}

/// Independence and matching polynomials of H_{d,n}, the disjoint union of
/// n/(2d) copies of K_{d,d}.
inline IntPolynomial hdn_independence(int d, int n) {
  if (d < 1 || n % (2 * d) != 0) throw DomainError("H_{d,n} needs 2d | n");
  IntPolynomial k = IntPolynomial{1, 1}.pow(static_cast<unsigned>(d)) * IntPolynomial::constant(2) -
                    IntPolynomial::one();
  return k.pow(static_cast<unsigned>(n / (2 * d)));
}

inline IntPolynomial hdn_matching(int d, int n) {
  if (d < 1 || n % (2 * d) != 0) throw DomainError("H_{d,n} needs 2d | n");
  return matching::kdd_matching_poly(d).pow(static_cast<unsigned>(n / (2 * d)));
}

struct LampickResult {
  Rational lambda;
  Rational mode_probability;
};

/// The fugacity at which sizes k and k+1 are equally likely, and the
/// probability of size k there.
inline LampickResult lampick_lambda(const IntPolynomial& p, int k) {
  if (k < 0 || p[static_cast<std::size_t>(k)] == 0 || p[static_cast<std::size_t>(k) + 1] == 0) {
    throw DomainError("lampick needs c_k, c_{k+1} > 0 (k=" + std::to_string(k) + ")");
  }
  LampickResult r;
  r.lambda = Rational(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k) + 1]);
  r.mode_probability = size_distribution(p, r.lambda).probabilities[static_cast<std::size_t>(k)];
  return r;
}

/// mode^2 * 4n > 1, i.e. mode > 1/(2 sqrt n).
inline bool exceeds_inverse_two_sqrt(const Rational& mode, int n) {
  return mode * mode * Rational(4 * n) > Rational(1);
}

/// For the top size k = deg p there is no k+1; equalise k-1 and k instead.
inline LampickResult lampick_for_size(const IntPolynomial& p, int k) {
  if (k >= 1 && k == p.degree()) {
    LampickResult r = lampick_lambda(p, k - 1);
    r.mode_probability = size_distribution(p, r.lambda).probabilities[static_cast<std::size_t>(k)];
    return r;
  }
  return lampick_lambda(p, k);
}

struct LogConcavityResult {
  bool sequence_ok = true;
  std::optional<int> first_violation;
  bool binomial_base_ok = true;  // C(d,j)^2 > C(d,j-1) C(d,j+1)
  bool matching_base_ok = true;  // C(d,j)^4 j!^2 > C(d,j-1)^2 (j-1)! C(d,j+1)^2 (j+1)!
  bool ok() const { return sequence_ok && binomial_base_ok && matching_base_ok; }
};

/// Log-concavity of the size distribution of p at x, plus the two base
/// inequalities for K_{d,d} when d >= 2 is given.
inline LogConcavityResult log_concavity_check(const IntPolynomial& p, const Rational& lambda, int d = 0) {
  LogConcavityResult r;
  const auto dist = size_distribution(p, lambda).probabilities;
  for (std::size_t j = 1; j + 1 < dist.size(); ++j) {
    if (dist[j] * dist[j] < dist[j - 1] * dist[j + 1]) {
      r.sequence_ok = false;
      r.first_violation = static_cast<int>(j);
      break;
    }
  }
  for (int j = 1; j <= d - 1; ++j) {
    const auto uj = static_cast<unsigned long>(j), ud = static_cast<unsigned long>(d);
    const BigInt c = binomial(ud, uj), cm = binomial(ud, uj - 1), cp = binomial(ud, uj + 1);
    if (!(c * c > cm * cp)) r.binomial_base_ok = false;
    const BigInt fj = factorial(uj);
    if (!(c * c * c * c * fj * fj > cm * cm * factorial(uj - 1) * cp * cp * factorial(uj + 1)))
      r.matching_base_ok = false;
  }
  return r;
}

struct VarianceResult {
  Rational independent_sets;
  Rational matchings;
  Rational bound;  // d/4
  bool ok() const { return independent_sets <= bound && matchings <= bound; }
};

/// Variance of |I| and |M| on K_{d,d} against 2d/8.
inline VarianceResult variance_check(int d, const Rational& lambda) {
  if (d < 1) throw DomainError("d must be positive");
  VarianceResult r;
  r.independent_sets = size_distribution(hdn_independence(d, 2 * d), lambda).variance();
  r.matchings = size_distribution(matching::kdd_matching_poly(d), lambda).variance();
  r.bound = Rational(d, 4);
  return r;
}

struct GivenSizeResult {
  Verdict verdict = Verdict::kNotApplicable;
  std::vector<std::string> failures;
};

/// i_k(G) <= 2 sqrt(n) i_k(H_{d,n}) and the same for m_k, compared as
/// i_k(G)^2 <= 4n i_k(H)^2.
inline GivenSizeResult given_size_bound(const Graph& g) {
  GivenSizeResult r;
  const auto d = regular_degree(g);
  const int n = g.vertex_count();
  if (!d || *d < 1 || n % (2 * *d) != 0) return r;
  const Counts c = counts(g);
  auto compare = [&](const std::vector<BigInt>& mine, const IntPolynomial& h, const char* what) {
    for (std::size_t k = 0; k < mine.size(); ++k) {
      const BigInt hk = h[k];
      if (mine[k] * mine[k] > BigInt(4 * n) * hk * hk) {
        r.failures.push_back(std::string(what) + "_" + std::to_string(k) + " exceeds 2 sqrt(n) times H_{d,n}");
      }
    }
  };
  compare(c.independent_sets, hdn_independence(*d, n), "i");
  compare(c.matchings, hdn_matching(*d, n), "m");
  r.verdict = r.failures.empty() ? Verdict::kPass : Verdict::kFail;
  return r;
}

// ---------------------------------------------------------------------------
// Empirical evidence for the ratio conjectures.

struct RatioRow {
  int k = 0;
  Rational corpus_max;  // max over corpus of c_k / c_{k-1}
  std::size_t argmax = 0;
  Rational hdn_ratio;
  bool hdn_attains = false;  // H_{d,n} ratio >= corpus max
};

struct ConjectureReport {
  std::vector<RatioRow> independent_sets;
  std::vector<RatioRow> matchings;
  std::vector<std::size_t> skipped;  // corpus indices not d-regular on n vertices
  std::vector<std::string> counterexamples;
};

inline ConjectureReport conjecture_ratio_check(const std::vector<Graph>& corpus, int d, int n) {
  ConjectureReport rep;
  std::vector<std::size_t> used;
  std::vector<Counts> cs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].vertex_count() != n || !is_d_regular(corpus[i], d)) {
      rep.skipped.push_back(i);
      continue;
    }
    used.push_back(i);
    cs.push_back(counts(corpus[i]));
  }
  auto table = [&](bool matchings, const IntPolynomial& h, std::vector<RatioRow>& rows) {
    for (int k = 1; k <= h.degree(); ++k) {
      RatioRow row;
      row.k = k;
      row.hdn_ratio = Rational(h[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k) - 1]);
      bool any = false;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& v = matchings ? cs[i].matchings : cs[i].independent_sets;
        const auto uk = static_cast<std::size_t>(k);
        const Rational ratio = uk < v.size() ? Rational(v[uk], v[uk - 1]) : Rational(0);
        if (!any || ratio > row.corpus_max) {
          row.corpus_max = ratio;
          row.argmax = used[i];
          any = true;
        }
      }
      row.hdn_attains = !any || row.hdn_ratio >= row.corpus_max;
      if (!row.hdn_attains) {
        rep.counterexamples.push_back(std::string(matchings ? "m" : "i") + " ratio at k=" + std::to_string(k) +
                                      " exceeded by corpus graph " + std::to_string(row.argmax));
      }
      rows.push_back(std::move(row));
    }
  };
  table(false, hdn_independence(d, n), rep.independent_sets);
  table(true, hdn_matching(d, n), rep.matchings);
  return rep;
}

/// log(m_{floor(rho n)}(H_{d,n})) / n, or nullopt when 2d does not divide n.
inline std::optional<long double> monomer_entropy(int d, const Rational& rho, int n) {
  if (rho.sign() < 0 || rho > Rational(1, 2)) throw DomainError("rho must lie in [0, 1/2]");
  if (d < 1 || n <= 0 || n % (2 * d) != 0) return std::nullopt;
  const Rational target = rho * Rational(n);
  const BigInt k = target.num() / target.den();
  const BigInt m = hdn_matching(d, n)[static_cast<std::size_t>(k.get_ui())];
  return log_bigint(m) / static_cast<long double>(n);
}

}  // namespace occfrac::bounds
