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

// The monomer-dimer linear program over edge free neighbourhoods.
//
// Pick a uniform edge e = (u, w) with a uniform orientation (u on the left).
// The free neighbourhood of e keeps the edges incident to e whose far
// endpoint is not matched by an edge disjoint from e's closed neighbourhood.
// Up to isomorphism it is a triple (i, j, k): i left pendant edges, j right
// pendant edges, k triangles through e.
//
// An edge g is "uncovered" when no matching edge other than g itself touches
// it. gamma_e(t) is the conditional law of the number of uncovered left
// neighbours of e, gamma_f(t) that of the uncovered right neighbours of a
// uniform left neighbour f of e.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "occfrac/certificate.hpp"
#include "occfrac/enumeration.hpp"
#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/polynomial.hpp"
#include "occfrac/predicates.hpp"
#include "occfrac/rational.hpp"
#include "occfrac/simplex.hpp"

namespace occfrac::matching {

struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  auto operator<=>(const Triple&) const = default;
  Triple mirrored() const { return {j, i, k}; }
  std::string str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }
};

inline bool admissible(const Triple& t, int d) {
  return t.i >= 0 && t.j >= 0 && t.k >= 0 && t.i + t.k <= d - 1 && t.j + t.k <= d - 1;
}

inline void require_degree(int d) {
  if (d < 2) throw DomainError("matching LP needs d >= 2 (got " + std::to_string(d) + ")");
}

/// All admissible triples in lexicographic order.
inline std::vector<Triple> enumerate_triples(int d) {
  require_degree(d);
  std::vector<Triple> out;
  for (int i = 0; i <= d - 1; ++i)
    for (int j = 0; j <= d - 1; ++j)
      for (int k = 0; k + std::max(i, j) <= d - 1; ++k) out.push_back({i, j, k});
  return out;
}

/// M_{i,j,k} = 1 + (i+j+2k) x + [k^2 + k(i+j-1) + ij] x^2.
inline IntPolynomial m_ijk(const Triple& t) {
  const long i = t.i, j = t.j, k = t.k;
  return IntPolynomial{1, i + j + 2 * k, k * k + k * (i + j - 1) + i * j};
}

/// M_{K_{l,l}} = sum_k C(l,k)^2 k! x^k.
inline IntPolynomial kdd_matching_poly(int l) {
  std::vector<BigInt> c;
  for (int k = 0; k <= l; ++k) {
    const BigInt b = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k));
    c.push_back(b * b * factorial(static_cast<unsigned long>(k)));
  }
  return IntPolynomial(std::move(c));
}

inline Rational beta(int t, const Rational& lambda) { return Rational(1) + Rational(t) * lambda; }

/// Edge occupancy of K_{d,d}: x M_{K_{d-1,d-1}} / M_{K_{d,d}}.
inline Rational kdd_edge_occupancy(int d, const Rational& lambda) {
  return lambda * kdd_matching_poly(d - 1).eval(lambda) / kdd_matching_poly(d).eval(lambda);
}

/// x M' / (2(d-1)(x + M)).
inline Rational alpha_bar(const Triple& t, const Rational& lambda, int d) {
  require_degree(d);
  const IntPolynomial m = m_ijk(t);
  return lambda * m.derivative().eval(lambda) /
         (Rational(2 * (d - 1)) * (lambda + m.eval(lambda)));
}

namespace detail {

class Accumulator {
 public:
  Accumulator(int d, const Triple& t) : v_(static_cast<std::size_t>(d)), triple_(t) {}
  void add(int t, const Rational& x) {
    if (x.is_zero()) return;
    if (t < 0 || t >= static_cast<int>(v_.size())) {
      throw DomainError("triple " + triple_.str() + " puts mass at t=" + std::to_string(t));
    }
    v_[static_cast<std::size_t>(t)] += x;
  }
  RationalVector scaled(const Rational& z) && {
    for (auto& x : v_) x /= z;
    return std::move(v_);
  }

 private:
  RationalVector v_;
  Triple triple_;
};

}  // namespace detail

/// gamma_e over t = 0..d-1.
inline RationalVector gamma_e(const Triple& tr, const Rational& lambda, int d) {
  require_degree(d);
  if (!admissible(tr, d)) throw DomainError("inadmissible triple " + tr.str());
  const auto [i, j, k] = tr;
  detail::Accumulator acc(d, tr);
  acc.add(0, lambda);
  acc.add(1, Rational(i) * lambda * beta(j + k, lambda) + Rational(k) * lambda * beta(j + k - 1, lambda));
  acc.add(i + k, beta(j, lambda));
  acc.add(i + k - 1, Rational(k) * lambda);
  return std::move(acc).scaled(lambda + m_ijk(tr).eval(lambda));
}

/// gamma_f over t = 0..d-1.
inline RationalVector gamma_f(const Triple& tr, const Rational& lambda, int d) {
  require_degree(d);
  if (!admissible(tr, d)) throw DomainError("inadmissible triple " + tr.str());
  const auto [i, j, k] = tr;
  const Rational x = Rational(i) * lambda * beta(j + k, lambda) +
                     Rational(k) * lambda * beta(j + k - 1, lambda);
  detail::Accumulator acc(d, tr);
  acc.add(0, x);
  acc.add(1, Rational(d - 1) * lambda + Rational(d - 2) * x);
  acc.add(i + k - 2, Rational((i + k - 1) * k) * lambda);
  acc.add(i + k - 1, Rational((d - i - k) * k + (i + k) * j) * lambda);
  acc.add(i + k, Rational((d - 1 - i - k) * j) * lambda + Rational(i + k));
  acc.add(i + k + 1, Rational(d - 1 - i - k));
  return std::move(acc).scaled(Rational(d - 1) * (lambda + m_ijk(tr).eval(lambda)));
}

/// The marginal formulas used to build the LP. Swappable so that a
/// deliberately corrupted formula can be fed through the whole pipeline.
struct TripleFormulas {
  std::function<RationalVector(const Triple&, const Rational&, int)> gamma_e = matching::gamma_e;
  std::function<RationalVector(const Triple&, const Rational&, int)> gamma_f = matching::gamma_f;
};

/// gamma_f with the coefficients of t = i+k and t = i+k+1 exchanged.
inline TripleFormulas corrupted_gamma_f() {
  TripleFormulas f;
  f.gamma_f = [](const Triple& tr, const Rational& lambda, int d) {
    RationalVector v = gamma_f(tr, lambda, d);
    const int a = tr.i + tr.k, b = a + 1;
    if (b < d) std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
    return v;
  };
  return f;
}

struct MatchingConfig {
  Triple triple;
  IntPolynomial M;
  Rational alpha_bar;
  RationalVector gamma_e_left, gamma_e_right, gamma_f_left, gamma_f_right;

  /// (1/2)[gf(i,j,k) + gf(j,i,k) - ge(i,j,k) - ge(j,i,k)](t)
  Rational row(std::size_t t) const {
    return (gamma_f_left[t] + gamma_f_right[t] - gamma_e_left[t] - gamma_e_right[t]) / Rational(2);
  }
};

inline MatchingConfig make_config(const Triple& t, const Rational& lambda, int d,
                                  const TripleFormulas& f = {}) {
  ::occfrac::detail::require_positive_fugacity(lambda);
  return {t,
          m_ijk(t),
          alpha_bar(t, lambda, d),
          f.gamma_e(t, lambda, d),
          f.gamma_e(t.mirrored(), lambda, d),
          f.gamma_f(t, lambda, d),
          f.gamma_f(t.mirrored(), lambda, d)};
}

inline std::vector<MatchingConfig> configurations(int d, const Rational& lambda, const TripleFormulas& f = {}) {
  std::vector<MatchingConfig> out;
  for (const auto& t : enumerate_triples(d)) out.push_back(make_config(t, lambda, d, f));
  return out;
}

/// Columns follow enumerate_triples(d). Row 0 is sum q = 1, row 1 + t the
/// marginal constraint for t = 0..d-2.
inline LinearProgram build_primal(int d, const Rational& lambda, const TripleFormulas& f = {}) {
  const auto configs = configurations(d, lambda, f);
  LinearProgram lp;
  lp.rows.assign(static_cast<std::size_t>(d), {});
  lp.rhs.assign(static_cast<std::size_t>(d), Rational(0));
  lp.rhs[0] = Rational(1);
  for (const auto& c : configs) {
    lp.objective.push_back(c.alpha_bar);
    lp.rows[0].push_back(Rational(1));
    for (int t = 0; t + 1 < d; ++t) lp.rows[static_cast<std::size_t>(t) + 1].push_back(c.row(static_cast<std::size_t>(t)));
  }
  return lp;
}

// ---------------------------------------------------------------------------
// Dual certificate.

struct DualVariables {
  RationalVector lambdas;  // Lambda_0 .. Lambda_{d-1}
  Rational optimum;        // price of the normalisation row

  /// Lambda_t, zero outside 0..d-1.
  Rational at(int t) const {
    return t < 0 || t >= static_cast<int>(lambdas.size()) ? Rational(0) : lambdas[static_cast<std::size_t>(t)];
  }
};

/// Lambda_{d-1} = 0, Lambda_{d-2} in closed form, then the (i,i,0)
/// equality constraints solved downward for Lambda_{i-1}.
inline DualVariables dual_variables(int d, const Rational& lambda) {
  require_degree(d);
  if (lambda.sign() <= 0) throw DomainError("fugacity must be positive (got " + lambda.str() + ")");
  const Rational a = kdd_edge_occupancy(d, lambda);
  const Rational dm1(d - 1);
  DualVariables dv;
  dv.optimum = a;
  dv.lambdas.assign(static_cast<std::size_t>(d), Rational(0));
  auto& L = dv.lambdas;
  L[static_cast<std::size_t>(d) - 2] =
      (lambda + dm1 * lambda * lambda - a * beta(d - 1, lambda) * beta(d, lambda)) / (dm1 * lambda);
  for (int i = d - 2; i >= 1; --i) {
    const Rational ii(i);
    const Rational bi = beta(i, lambda);
    L[static_cast<std::size_t>(i) - 1] =
        (dv.at(i) * (dm1 - ii + ii * ii * lambda) - dv.at(i + 1) * (dm1 - ii) -
         dm1 * a * bi * (bi + ii * lambda / dm1) + ii * lambda * bi) /
        (ii * ii * lambda);
  }
  return dv;
}

/// Left side of the (i,i,0) equality constraint; zero when satisfied.
inline Rational equality_residual(int i, const DualVariables& dv, const Rational& lambda, int d) {
  const Rational dm1(d - 1), ii(i), bi = beta(i, lambda);
  return dv.optimum * bi * (bi + ii * lambda / dm1) - ii * lambda * bi / dm1 +
         dv.at(i - 1) * ii * ii * lambda / dm1 - dv.at(i) * (dm1 - ii + ii * ii * lambda) / dm1 +
         dv.at(i + 1) * (dm1 - ii) / dm1;
}

/// F_d(t) = t [x (1 - d alpha) + Lambda_t - Lambda_{t-1}], with F_d(0) = 0.
inline Rational f_definition(int t, const DualVariables& dv, const Rational& lambda, int d) {
  if (t < 0 || t > d - 1) throw DomainError("F_d(t) needs 0 <= t <= d-1 (got t=" + std::to_string(t) + ")");
  if (t == 0) return Rational(0);
  return Rational(t) * (lambda * (Rational(1) - Rational(d) * dv.optimum) + dv.at(t) - dv.at(t - 1));
}

/// t(d-1)/M_{K_{d,d}} sum_{l=t-1}^{d-2} (d-1-t)!/(l+1-t)! x^{d-l} M_{K_{l,l}}.
inline Rational f_explicit(int t, const Rational& lambda, int d) {
  require_degree(d);
  if (t < 0 || t > d - 1) throw DomainError("F_d(t) needs 0 <= t <= d-1 (got t=" + std::to_string(t) + ")");
  if (t == 0) return Rational(0);
  Rational sum;
  for (int l = t - 1; l <= d - 2; ++l) {
    sum += Rational(factorial(static_cast<unsigned long>(d - 1 - t)), factorial(static_cast<unsigned long>(l + 1 - t))) *
           pow(lambda, d - l) * kdd_matching_poly(l).eval(lambda);
  }
  return Rational(t * (d - 1)) * sum / kdd_matching_poly(d).eval(lambda);
}

/// Checks of the function F_d on one (d, x).
struct FTable {
  RationalVector definition;  // index t = 0..d-1
  RationalVector explicit_form;
  RationalVector r;           // R_d(t) for t = 1..d-2 (index t)
  bool forms_agree = true;
  bool last_value_matches = true;  // F_d(d-1) = (d-1)^2 x^2 M_{K_{d-2}} / M_{K_d}
  bool recurrence_holds = true;    // (d-1-t)F(t+1) = (t+1)[t x F(t) + (d-1)x - (d-1) alpha beta_{d+t}]
  bool strictly_increasing = true;
  bool r_positive = true;
  bool r_sum_form_agrees = true;
  bool crude_bound_holds = true;  // M_{K_t} > t x M_{K_{t-1}}, t = 1..d
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline FTable f_table(int d, const Rational& lambda) {
  const DualVariables dv = dual_variables(d, lambda);
  const Rational mkd = kdd_matching_poly(d).eval(lambda);
  FTable tab;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    tab.failures.push_back(std::move(msg));
  };
  for (int t = 0; t <= d - 1; ++t) {
    tab.definition.push_back(f_definition(t, dv, lambda, d));
    tab.explicit_form.push_back(f_explicit(t, lambda, d));
    if (tab.definition.back() != tab.explicit_form.back())
      fail(tab.forms_agree, "F_" + std::to_string(d) + "(" + std::to_string(t) + "): definition " +
                                tab.definition.back().str() + " vs explicit " + tab.explicit_form.back().str());
  }
  auto F = [&](int t) { return tab.definition[static_cast<std::size_t>(t)]; };
  const Rational last = Rational((d - 1) * (d - 1)) * lambda * lambda *
                        kdd_matching_poly(d - 2).eval(lambda) / mkd;
  if (F(d - 1) != last) fail(tab.last_value_matches, "F_d(d-1) closed form mismatch");

  tab.r.assign(static_cast<std::size_t>(d), Rational(0));
  for (int t = 1; t <= d - 2; ++t) {
    const Rational lhs = Rational(d - 1 - t) * F(t + 1);
    const Rational rhs = Rational(t + 1) * (Rational(t) * lambda * F(t) + Rational(d - 1) * lambda -
                                            Rational(d - 1) * dv.optimum * beta(d + t, lambda));
    if (lhs != rhs) fail(tab.recurrence_holds, "F recurrence fails at t=" + std::to_string(t));
    if (!(F(t + 1) > F(t))) fail(tab.strictly_increasing, "F not increasing at t=" + std::to_string(t));

    const Rational r = mkd / Rational(d - 1) * (F(t + 1) - F(t)) /
                       Rational(factorial(static_cast<unsigned long>(d - 2 - t)));
    tab.r[static_cast<std::size_t>(t)] = r;
    if (r.sign() <= 0) fail(tab.r_positive, "R_d(" + std::to_string(t) + ") <= 0");
    Rational s1, s2;
    for (int l = t; l <= d - 2; ++l)
      s1 += pow(lambda, d - l) / Rational(factorial(static_cast<unsigned long>(l - t))) *
            kdd_matching_poly(l).eval(lambda);
    for (int l = t - 1; l <= d - 2; ++l)
      s2 += pow(lambda, d - l) / Rational(factorial(static_cast<unsigned long>(l + 1 - t))) *
            kdd_matching_poly(l).eval(lambda);
    if (r != Rational(t + 1) * s1 - Rational(t * (d - 1 - t)) * s2)
      fail(tab.r_sum_form_agrees, "R_d(" + std::to_string(t) + ") sum form mismatch");
  }
  for (int t = 1; t <= d; ++t) {
    if (!(kdd_matching_poly(t).eval(lambda) > Rational(t) * lambda * kdd_matching_poly(t - 1).eval(lambda)))
      fail(tab.crude_bound_holds, "crude bound fails at t=" + std::to_string(t));
  }
  return tab;
}

/// Alias matching the monotonicity check's usual name.
inline FTable check_monotone_f(int d, const Rational& lambda) { return f_table(d, lambda); }

/// The simplified dual constraint L(i,j,k).
inline Rational l_value(const Triple& tr, const DualVariables& dv, const Rational& lambda, int d) {
  const auto [i, j, k] = tr;
  auto side = [&](int a, int b) {
    return dv.at(a + k - 2) * Rational((a + k - 1) * k) +
           dv.at(a + k - 1) * Rational(k + (a + k) * (b - a - 2 * k)) +
           dv.at(a + k) * Rational((a + k) * (a + k - b));
  };
  return lambda * Rational((i - j) * (i - j) + 2 * k) * (Rational(1) - Rational(d) * dv.optimum) +
         side(i, j) + side(j, i);
}

/// The unsimplified dual constraint, scaled by 2(d-1)(x + M).
inline Rational dual2_value(const Triple& tr, const DualVariables& dv, const Rational& lambda, int d) {
  const auto [i, j, k] = tr;
  const IntPolynomial m = m_ijk(tr);
  const Rational mv = m.eval(lambda), mp = m.derivative().eval(lambda);
  const Rational& a = dv.optimum;
  auto side = [&](int p, int q) {
    return dv.at(p + k - 2) * Rational((p + k - 1) * k) * lambda +
           dv.at(p + k - 1) * (Rational((d - p - k) * k + (p + k) * q - (d - 1) * k) * lambda) +
           dv.at(p + k) * (Rational((d - 1 - p - k) * q) * lambda + Rational(p + k) -
                           Rational(d - 1) * beta(q, lambda)) +
           dv.at(p + k + 1) * Rational(d - 1 - p - k);
  };
  return a * (lambda * mp + Rational(2 * (d - 1)) * mv) - lambda * mp + side(i, j) + side(j, i);
}

struct TripleCheck {
  Triple triple;
  Rational slack;  // raw LP dual slack from the marginal formulas
  Rational dual2;  // 2(d-1)(x+M) * slack, in expanded form
  Rational l;      // simplified form; dual2 = x * l
};

struct MatchingCertificate {
  int d = 0;
  Rational lambda;
  DualVariables dual;
  std::vector<TripleCheck> triples;
  FTable f;
  bool equalities_hold = true;
  bool telescoping_holds = true;
  CertificateReport report;
};

/// Evaluates every dual constraint three ways and cross-checks them.
/// Failures are recorded in report.failures, each naming its triple.
inline MatchingCertificate evaluate_dual_certificate(int d, const Rational& lambda, const TripleFormulas& formulas = {}) {
  MatchingCertificate cert;
  cert.d = d;
  cert.lambda = lambda;
  cert.dual = dual_variables(d, lambda);
  cert.f = f_table(d, lambda);
  const DualVariables& dv = cert.dual;
  auto& rep = cert.report;
  rep.optimum = dv.optimum;
  rep.dual_values.emplace_back("Lambda_p", dv.optimum);
  for (int t = 0; t < d; ++t) rep.dual_values.emplace_back("Lambda_" + std::to_string(t), dv.at(t));
  for (auto& msg : cert.f.failures) rep.failures.push_back(msg);

  for (int i = 0; i <= d - 1; ++i) {
    const Rational r = equality_residual(i, dv, lambda, d);
    if (!r.is_zero()) {
      cert.equalities_hold = false;
      rep.failures.push_back("equality constraint (" + std::to_string(i) + "," + std::to_string(i) +
                             ",0) residual " + r.str());
    }
  }

  std::map<Triple, Rational> l_of;
  for (const auto& c : configurations(d, lambda, formulas)) {
    const Triple& tr = c.triple;
    Rational slack = dv.optimum - c.alpha_bar;
    for (int t = 0; t + 1 < d; ++t) slack += dv.at(t) * c.row(static_cast<std::size_t>(t));
    TripleCheck tc{tr, slack, dual2_value(tr, dv, lambda, d), l_value(tr, dv, lambda, d)};
    const Rational scaled = Rational(2 * (d - 1)) * (lambda + c.M.eval(lambda)) * tc.slack;
    const std::string id = tr.str();
    if (scaled != tc.dual2) rep.failures.push_back("triple " + id + ": LP slack disagrees with expanded dual constraint");
    if (tc.dual2 != lambda * tc.l) rep.failures.push_back("triple " + id + ": expanded and simplified dual constraints differ");
    const bool equality = tr.i == tr.j && tr.k == 0;
    if (equality && !tc.slack.is_zero()) rep.failures.push_back("triple " + id + ": expected zero slack, got " + tc.slack.str());
    if (!equality && tc.slack.sign() <= 0) rep.failures.push_back("triple " + id + ": expected positive slack, got " + tc.slack.str());
    if (!equality && tc.l.sign() <= 0) rep.failures.push_back("triple " + id + ": L = " + tc.l.str() + " is not positive");
    if (tc.slack.is_zero()) rep.tight_set.push_back(id);
    rep.slacks.push_back({id, tc.slack});
    l_of.emplace(tr, tc.l);
    cert.triples.push_back(std::move(tc));
  }

  // L(i-1,j-1,k+1) - L(i,j,k) = F(i+k) - F(i+k-1) + F(j+k) - F(j+k-1)
  auto F = [&](int t) { return cert.f.definition[static_cast<std::size_t>(t)]; };
  for (const auto& [tr, l] : l_of) {
    if (tr.i < 1 || tr.j < 1) continue;
    const Triple up{tr.i - 1, tr.j - 1, tr.k + 1};
    const Rational lhs = l_of.at(up) - l;
    const Rational rhs = F(tr.i + tr.k) - F(tr.i + tr.k - 1) + F(tr.j + tr.k) - F(tr.j + tr.k - 1);
    if (lhs != rhs) {
      cert.telescoping_holds = false;
      rep.failures.push_back("telescoping identity fails between " + up.str() + " and " + tr.str());
    }
  }
  return cert;
}

/// As evaluate_dual_certificate, but throws CertificateFailure on the first
/// failed check.
inline MatchingCertificate check_dual_constraints(int d, const Rational& lambda, const TripleFormulas& formulas = {}) {
  auto cert = evaluate_dual_certificate(d, lambda, formulas);
  if (!cert.report.valid()) throw CertificateFailure("matching d=" + std::to_string(d), cert.report.failures.front());
  return cert;
}

/// M_{K_{d,d}} - beta_{2d-1} M_{K_{d-1,d-1}} + (d-1)^2 x^2 M_{K_{d-2,d-2}} == 0
/// as polynomials.
inline bool laguerre_check(int d) {
  require_degree(d);
  const IntPolynomial b{1, 2L * d - 1};
  const IntPolynomial sq = IntPolynomial::monomial(2, BigInt((d - 1) * (d - 1)));
  return (kdd_matching_poly(d) - b * kdd_matching_poly(d - 1) + sq * kdd_matching_poly(d - 2)).is_zero();
}

// ---------------------------------------------------------------------------
// Triple distribution of an actual graph.

struct EmpiricalTripleDistribution {
  int d = 0;
  std::map<Triple, Rational> q;
  std::map<Triple, RationalVector> gamma_e;  // conditional on the triple
  std::map<Triple, RationalVector> gamma_f;
  RationalVector marginal_e;  // unconditional law of the uncovered count
  RationalVector marginal_f;
  Rational objective;  // sum q * alpha_bar
};

/// Matching counts behind the triple distribution, split by triple,
/// uncovered count and matching size. Independent of the fugacity.
struct TripleCounts {
  int d = 0;
  int edge_count = 0;
  std::vector<std::uint64_t> sizes;  // matchings by size
  std::vector<std::uint64_t> q, e, f;

  std::size_t triple_index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(d) + static_cast<std::size_t>(k);
  }
  std::size_t triple_slots() const { return static_cast<std::size_t>(d) * static_cast<std::size_t>(d) * static_cast<std::size_t>(d); }
  std::size_t width() const { return sizes.size(); }
};

/// Enumerates matchings once and counts triples for a uniform edge and
/// orientation.
inline TripleCounts count_triples(const Graph& g, int max_edges = 20) {
  const auto deg = regular_degree(g);
  if (!deg) throw DomainError("graph is not regular");
  const int d = *deg;
  require_degree(d);
  ConfigurationSpace space(g, Model::kMatching, OracleLimits{0, max_edges});
  const auto& edges = space.edges();

  TripleCounts tc;
  tc.d = d;
  tc.edge_count = g.edge_count();
  tc.sizes.assign(static_cast<std::size_t>(g.vertex_count() / 2) + 1, 0);
  const std::size_t w = tc.width(), dd = static_cast<std::size_t>(d);
  tc.q.assign(tc.triple_slots() * w, 0);
  tc.e.assign(tc.triple_slots() * dd * w, 0);
  tc.f.assign(tc.triple_slots() * dd * w, 0);
  std::vector<int> partner(static_cast<std::size_t>(g.vertex_count()));
  std::vector<int> uncovered_count(partner.size());

  for (const auto& conf : space.configurations()) {
    const auto size = static_cast<std::size_t>(conf.size);
    ++tc.sizes[size];
    std::fill(partner.begin(), partner.end(), -1);
    for (const auto e : conf.edges) {
      partner[static_cast<std::size_t>(edges[e].first)] = edges[e].second;
      partner[static_cast<std::size_t>(edges[e].second)] = edges[e].first;
    }
    auto p = [&](int v) { return partner[static_cast<std::size_t>(v)]; };
    // Edge {a, b} is uncovered iff no matching edge other than itself touches it.
    auto uncovered = [&](int a, int b) {
      if (p(a) == b) return true;
      return p(a) < 0 && p(b) < 0;
    };
    for (int a = 0; a < g.vertex_count(); ++a) {
      int count = 0;
      for_each_vertex(g.neighbors(a), [&](int x) { count += uncovered(a, x) ? 1 : 0; });
      uncovered_count[static_cast<std::size_t>(a)] = count;
    }
    auto uncovered_at = [&](int a, int other_end_excluded) {
      return static_cast<std::size_t>(uncovered_count[static_cast<std::size_t>(a)] -
                                      (uncovered(a, other_end_excluded) ? 1 : 0));
    };
    for (const auto& [e0, e1] : edges) {
      for (int side = 0; side < 2; ++side) {
        const int u = side ? e1 : e0;
        const int v = side ? e0 : e1;
        const VertexSet closed = bit(u) | bit(v);
        auto externally_matched = [&](int x) { return p(x) >= 0 && !((closed >> p(x)) & 1U); };
        Triple tr;
        const VertexSet nu = g.neighbors(u) & ~bit(v), nw = g.neighbors(v) & ~bit(u);
        for_each_vertex(nu | nw, [&](int x) {
          if (externally_matched(x)) return;
          const bool left = (nu >> x) & 1U, right = (nw >> x) & 1U;
          if (left && right) ++tr.k;
          else if (left) ++tr.i;
          else ++tr.j;
        });
        const std::size_t t = tc.triple_index(tr.i, tr.j, tr.k);
        ++tc.q[t * w + size];
        ++tc.e[(t * dd + uncovered_at(u, v)) * w + size];
        for_each_vertex(nu, [&](int x) { ++tc.f[(t * dd + uncovered_at(u, x)) * w + size]; });
      }
    }
  }
  return tc;
}

/// Exact triple distribution from precomputed counts.
inline EmpiricalTripleDistribution empirical_triple_distribution(const TripleCounts& tc, const Rational& lambda) {
  ::occfrac::detail::require_positive_fugacity(lambda);
  const int d = tc.d;
  const std::size_t w = tc.width(), dd = static_cast<std::size_t>(d);
  std::vector<Rational> power(w, Rational(1));
  for (std::size_t s = 1; s < w; ++s) power[s] = power[s - 1] * lambda;
  auto weight = [&](const std::vector<std::uint64_t>& v, std::size_t row) {
    Rational sum;
    for (std::size_t s = 0; s < w; ++s)
      if (v[row * w + s]) sum += Rational(v[row * w + s]) * power[s];
    return sum;
  };
  auto nonzero = [&](const std::vector<std::uint64_t>& v, std::size_t row) {
    return std::any_of(v.begin() + static_cast<std::ptrdiff_t>(row * w),
                       v.begin() + static_cast<std::ptrdiff_t>((row + 1) * w), [](std::uint64_t c) { return c != 0; });
  };
  const Rational z = weight(tc.sizes, 0);
  const Rational q_norm = z * Rational(2 * tc.edge_count), f_norm = q_norm * Rational(d - 1);

  EmpiricalTripleDistribution out;
  out.d = d;
  out.marginal_e.assign(dd, Rational(0));
  out.marginal_f.assign(dd, Rational(0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const std::size_t t = tc.triple_index(i, j, k);
        if (!nonzero(tc.q, t)) continue;
        const Triple tr{i, j, k};
        const Rational mass = weight(tc.q, t) / q_norm;
        out.q.emplace(tr, mass);
        out.objective += mass * alpha_bar(tr, lambda, d);
        auto& ge = out.gamma_e[tr];
        auto& gf = out.gamma_f[tr];
        ge.assign(dd, Rational(0));
        gf.assign(dd, Rational(0));
        for (std::size_t c = 0; c < dd; ++c) {
          if (nonzero(tc.e, t * dd + c)) {
            const Rational m = weight(tc.e, t * dd + c) / q_norm;
            ge[c] = m / mass;
            out.marginal_e[c] += m;
          }
          if (nonzero(tc.f, t * dd + c)) {
            const Rational m = weight(tc.f, t * dd + c) / f_norm;
            gf[c] = m / mass;
            out.marginal_f[c] += m;
          }
        }
      }
    }
  }
  return out;
}

/// Exact triple distribution under the monomer-dimer measure with a
/// uniform edge and orientation, by enumerating matchings.
inline EmpiricalTripleDistribution empirical_triple_distribution(const Graph& g, const Rational& lambda,
                                                                 int max_edges = 20) {
  ::occfrac::detail::require_positive_fugacity(lambda);
  return empirical_triple_distribution(count_triples(g, max_edges), lambda);
}

/// Residuals of the LP rows (normalisation first, then t = 0..d-2) at the
/// empirical q, using the given marginal formulas.
inline RationalVector primal_residuals(const EmpiricalTripleDistribution& emp, const Rational& lambda,
                                       const TripleFormulas& f = {}) {
  RationalVector res(static_cast<std::size_t>(emp.d), Rational(0));
  res[0] = Rational(-1);
  for (const auto& [tr, mass] : emp.q) {
    const MatchingConfig c = make_config(tr, lambda, emp.d, f);
    res[0] += mass;
    for (int t = 0; t + 1 < emp.d; ++t) res[static_cast<std::size_t>(t) + 1] += mass * c.row(static_cast<std::size_t>(t));
  }
  return res;
}

}  // namespace occfrac::matching
