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

// Umbrella header.

#include "occfrac/acceptance.hpp"
#include "occfrac/bounds.hpp"
#include "occfrac/canonical.hpp"
#include "occfrac/certificate.hpp"
#include "occfrac/corpus.hpp"
#include "occfrac/enumeration.hpp"
#include "occfrac/errors.hpp"
#include "occfrac/families.hpp"
#include "occfrac/graph.hpp"
#include "occfrac/graph_io.hpp"
#include "occfrac/graph_polynomials.hpp"
#include "occfrac/hardcore_lp.hpp"
#include "occfrac/matching_lp.hpp"
#include "occfrac/polynomial.hpp"
#include "occfrac/predicates.hpp"
#include "occfrac/rational.hpp"
#include "occfrac/simplex.hpp"
#include "occfrac/verdict.hpp"
