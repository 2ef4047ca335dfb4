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

#include <random>
#include <set>

#include "occfrac/canonical.hpp"
#include "occfrac/families.hpp"
#include "oracles.hpp"

namespace {

using namespace occfrac;

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(21);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto perm = oracle::random_permutation(n, rng);
    EXPECT_EQ(canonical_key(g), canonical_key(g.relabeled(perm)));
    EXPECT_TRUE(oracle::isomorphic(g, canonical_form(g)));
  }
}

TEST(Canonical, KeysSeparateNonIsomorphicGraphs) {
  std::mt19937 rng(22);
  for (int it = 0; it < 400; ++it) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(canonical_key(a) == canonical_key(b), oracle::isomorphic(a, b));
  }
}

TEST(Canonical, ClassCountsMatchOrbitCounting) {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<CanonicalKey> keys;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) keys.insert(canonical_key(oracle::from_mask(n, m)));
    EXPECT_EQ(keys.size(), oracle::class_count(n)) << "n=" << n;
  }
}

TEST(Canonical, KnownClassCounts) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(oracle::class_count(n), expected[n]);
}

TEST(Canonical, LimitEnforced) {
  EXPECT_THROW(canonical_key(cycle(11)), CapabilityError);
  EXPECT_NO_THROW(canonical_key(cycle(11), 11));
  EXPECT_NE(labeled_key(path(3)), labeled_key(path(3).relabeled(std::vector<int>{1, 0, 2})));
}

}  // namespace
