// Copyright 2026 The rbkit Authors
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

#include <cstddef>
#include <map>
#include <optional>

#include "rbkit/rdf/dataset.hpp"

namespace rbkit::rdf {

struct IsomorphismOptions {
  /// Upper bound on blank nodes left ambiguous after color refinement. Above
  /// it the search raises ComplexityLimitError instead of backtracking.
  std::size_t maxAmbiguousBlankNodes = 64;
};

/// True iff some bijection between the blank nodes of `a` and `b` makes the
/// quad sets equal. Prefixes are ignored.
bool dataset_isomorphic(const Dataset& a, const Dataset& b,
                        const IsomorphismOptions& options = {});

/// The bijection witnessing isomorphism (blank node of `a` to blank node of
/// `b`), or nullopt when none exists.
std::optional<std::map<Term, Term>> find_blank_node_bijection(
    const Dataset& a, const Dataset& b, const IsomorphismOptions& options = {});

}  // namespace rbkit::rdf
