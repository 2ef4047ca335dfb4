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
#include <vector>

#include "occfrac/families.hpp"
#include "occfrac/graph.hpp"

namespace occfrac {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Small regular graphs used by the verification suites.
inline std::vector<CorpusEntry> bundled_corpus() {
  std::vector<CorpusEntry> c;
  for (int n = 3; n <= 12; ++n) c.push_back({"C" + std::to_string(n), cycle(n)});
  for (int n = 3; n <= 6; ++n) c.push_back({"prism" + std::to_string(n), prism(n)});
  c.push_back({"Q3", hypercube(3)});
  c.push_back({"Q4", hypercube(4)});
  c.push_back({"petersen", petersen()});
  for (int d = 2; d <= 6; ++d) c.push_back({"K" + std::to_string(d) + "," + std::to_string(d), complete_bipartite(d)});
  c.push_back({"H2,8", kdd_union(2, 8)});
  c.push_back({"H2,12", kdd_union(2, 12)});
  c.push_back({"H3,12", kdd_union(3, 12)});
  for (int n = 4; n <= 12; ++n) c.push_back({"K" + std::to_string(n), complete(n)});
  return c;
}

/// The vertex-transitive bipartite graphs used for the tree lower bound.
inline std::vector<CorpusEntry> transitive_bipartite_corpus() {
  return {{"C6", cycle(6)},
          {"C8", cycle(8)},
          {"C10", cycle(10)},
          {"C12", cycle(12)},
          {"K2,2", complete_bipartite(2)},
          {"K3,3", complete_bipartite(3)},
          {"K4,4", complete_bipartite(4)},
          {"Q3", hypercube(3)},
          {"Q4", hypercube(4)},
          {"prism4", prism(4)},
          {"prism6", prism(6)}};
}

}  // namespace occfrac
