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

#include <algorithm>
#include <map>
#include <vector>

#include "rbkit/rdf/dataset.hpp"

namespace rbkit::testing {

// Reference isomorphism: tries every bijection between the blank nodes.
inline bool brute_force_isomorphic(const rdf::Dataset& a, const rdf::Dataset& b) {
  if (a.size() != b.size()) return false;
  const auto left = a.blank_nodes();
  auto right = b.blank_nodes();
  if (left.size() != right.size()) return false;
  std::ranges::sort(right);
  do {
    std::map<rdf::Term, rdf::Term> mapping;
    for (std::size_t i = 0; i < left.size(); ++i) mapping.emplace(left[i], right[i]);
    const auto renamed = a.map_blank_nodes([&](const rdf::Term& t) { return mapping.at(t); });
    if (renamed == b) return true;
  } while (std::ranges::next_permutation(right).found);
  return false;
}

}  // namespace rbkit::testing
