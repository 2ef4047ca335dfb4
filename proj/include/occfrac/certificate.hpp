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
#include <utility>
#include <vector>

#include "occfrac/rational.hpp"

namespace occfrac {

struct SlackEntry {
  std::string id;
  Rational slack;
};

/// Self-contained record of a dual certificate: the dual values, the slack
/// of every dual constraint, and which constraints are tight. Anyone can
/// re-check it without re-solving the LP.
struct CertificateReport {
  std::vector<std::pair<std::string, Rational>> dual_values;
  std::vector<SlackEntry> slacks;
  std::vector<std::string> tight_set;
  Rational optimum;
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }

  bool feasible() const {
    for (const auto& s : slacks)
      if (s.slack.sign() < 0) return false;
    return true;
  }
};

}  // namespace occfrac
