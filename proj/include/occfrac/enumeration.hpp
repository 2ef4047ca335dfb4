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

// Brute-force enumeration of hard-core and monomer-dimer configurations.
// Everything here is deliberately independent of the polynomial recurrences
// and serves as the oracle the rest of the library is checked against.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/rational.hpp"

namespace occfrac {

enum class Model { kHardcore, kMatching };

struct OracleLimits {
  int max_vertices = 24;  // hard-core
  int max_edges = 24;     // monomer-dimer
};

/// One configuration. For the hard-core model `vertices` is the independent
/// set and `edges` is empty; for matchings `edges` lists indices into
/// Graph::edges() and `vertices` is the set of matched vertices.
struct Configuration {
  VertexSet vertices = 0;
  std::vector<std::uint16_t> edges;
  int size = 0;
};

/// Accumulates integer multiplicities per (key, configuration size) and turns
/// them into exact probabilities sum_k count_k x^k / (Z * normalizer).
template <class Key>
class WeightedTally {
 public:
  void add(const Key& key, int size, std::uint64_t multiplicity = 1) {
    auto& row = counts_[key];
    if (row.size() <= static_cast<std::size_t>(size)) row.resize(static_cast<std::size_t>(size) + 1, 0);
    row[static_cast<std::size_t>(size)] += multiplicity;
  }

  std::map<Key, Rational> finalize(const Rational& lambda, const Rational& partition,
                                   const Rational& normalizer = Rational(1)) const {
    std::map<Key, Rational> out;
    for (const auto& [key, row] : counts_) {
      Rational w;
      Rational power(1);
      for (std::uint64_t c : row) {
        if (c) w += Rational(c) * power;
        power *= lambda;
      }
      out.emplace(key, w / (partition * normalizer));
    }
    return out;
  }

 private:
  std::map<Key, std::vector<std::uint64_t>> counts_;
};

/// All independent sets or all matchings of a graph, materialized once.
class ConfigurationSpace {
 public:
  ConfigurationSpace(const Graph& g, Model model, OracleLimits limits = {})
      : graph_(g), model_(model), edges_(g.edges()) {
    if (model == Model::kHardcore) {
      if (g.vertex_count() > limits.max_vertices) {
        throw CapabilityError("hard-core enumeration is limited to " +
                              std::to_string(limits.max_vertices) + " vertices");
      }
      enumerate_independent(g.vertices(), 0, 0);
    } else {
      if (static_cast<int>(edges_.size()) > limits.max_edges) {
        throw CapabilityError("matching enumeration is limited to " +
                              std::to_string(limits.max_edges) + " edges");
      }
      std::vector<std::uint16_t> chosen;
      enumerate_matchings(0, chosen, 0);
    }
  }

  const Graph& graph() const { return graph_; }
  Model model() const { return model_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Configuration>& configurations() const { return configs_; }

  /// Sum over configurations of x^size.
  Rational partition(const Rational& lambda) const {
    WeightedTally<int> t;
    for (const auto& c : configs_) t.add(0, c.size);
    return t.finalize(lambda, Rational(1))[0];
  }

  /// Probability of the event under weights x^size.
  Rational probability(const std::function<bool(const Configuration&)>& event,
                       const Rational& lambda) const {
    WeightedTally<int> t;
    for (const auto& c : configs_) t.add(event(c) ? 1 : 0, c.size);
    auto probs = t.finalize(lambda, partition(lambda));
    auto it = probs.find(1);
    return it == probs.end() ? Rational(0) : it->second;
  }

  /// Expectation of an integer-valued observable, computed exactly.
  Rational expectation(const std::function<long(const Configuration&)>& f,
                       const Rational& lambda) const {
    Rational total;
    Rational z;
    for (const auto& c : configs_) {
      const Rational w = pow(lambda, c.size);
      z += w;
      total += w * Rational(f(c));
    }
    return total / z;
  }

  /// Vertices with no neighbor in the independent set (hard-core only).
  VertexSet uncovered(const Configuration& c) const {
    VertexSet covered = 0;
    for_each_vertex(c.vertices, [&](int v) { covered |= graph_.neighbors(v); });
    return graph_.vertices() & ~covered;
  }

 private:
  void enumerate_independent(VertexSet candidates, VertexSet chosen, int size) {
    if (!candidates) {
      configs_.push_back({chosen, {}, size});
      return;
    }
    const int v = lowest(candidates);
    enumerate_independent(candidates & ~bit(v), chosen, size);
    enumerate_independent(candidates & ~bit(v) & ~graph_.neighbors(v), chosen | bit(v), size + 1);
  }

  void enumerate_matchings(std::size_t next, std::vector<std::uint16_t>& chosen, VertexSet matched) {
    if (next == edges_.size()) {
      configs_.push_back({matched, chosen, static_cast<int>(chosen.size())});
      return;
    }
    enumerate_matchings(next + 1, chosen, matched);
    const auto [u, v] = edges_[next];
    if (!((matched >> u) & 1U) && !((matched >> v) & 1U)) {
      chosen.push_back(static_cast<std::uint16_t>(next));
      enumerate_matchings(next + 1, chosen, matched | bit(u) | bit(v));
      chosen.pop_back();
    }
  }

  Graph graph_;
  Model model_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Configuration> configs_;
};

/// Exact probability of `event` under the hard-core or monomer-dimer measure,
/// by exhaustive enumeration.
inline Rational event_probability_oracle(const Graph& g, Model model, const Rational& lambda,
                                         const std::function<bool(const Configuration&)>& event,
                                         OracleLimits limits = {}) {
  if (lambda.sign() <= 0) throw DomainError("fugacity must be positive");
  return ConfigurationSpace(g, model, limits).probability(event, lambda);
}

}  // namespace occfrac
