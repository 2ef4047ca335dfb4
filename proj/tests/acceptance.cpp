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


// Acceptance suite: one PASS/FAIL line per criterion.

#include <iomanip>
#include <iostream>

#include "occfrac/acceptance.hpp"

int main() {
  const occfrac::acceptance::Options opts;
  int failed = 0;
  for (std::size_t i = 0; i < occfrac::acceptance::criteria().size(); ++i) {
    const auto r = occfrac::acceptance::run(occfrac::acceptance::criteria()[i], static_cast<int>(i) + 1, opts);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << ": " << r.title << "  ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::endl;
    for (const auto& f : r.failures) std::cout << "      " << f << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? "FAILED: " : "ALL PASSED: ") << (10 - failed) << "/10 criteria" << std::endl;
  return failed ? 1 : 0;
}
