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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "rbkit/error.hpp"
#include "rbkit/metadata/metadata.hpp"

namespace rbkit::metadata {

std::vector<rdf::Term> functional_predicates(const Vocabulary& vocab) {
  return {vocab.elementCount,     vocab.byteSize,        vocab.sha256,
          vocab.statementCount,   vocab.distinctSubjects, vocab.distinctPredicates,
          vocab.distinctObjects,  vocab.usesNamedGraphs};
}

rdf::Dataset enrich_metadata(const rdf::Dataset& original, const rdf::Dataset& computed,
                             const Vocabulary& vocab) {
  const auto functional = functional_predicates(vocab);
  auto is_functional = [&](const rdf::Term& p) { return std::ranges::find(functional, p) != functional.end(); };

  using Slot = std::tuple<std::optional<rdf::Term>, rdf::Term, rdf::Term>;
  std::map<Slot, std::set<rdf::Term>> computedValues;
  for (const auto& q : computed) {
    if (is_functional(q.predicate)) computedValues[{q.graph, q.subject, q.predicate}].insert(q.object);
  }

  rdf::Dataset out;
  for (const auto& [name, iri] : original.prefixes()) out.set_prefix(name, iri);
  for (const auto& q : original) {
    const auto it = computedValues.find({q.graph, q.subject, q.predicate});
    if (it == computedValues.end()) {
      out.add(q);
      continue;
    }
    const auto sameCount = [&](const rdf::Term& c) {
      const auto a = q.object.as_integer();
      const auto b = c.as_integer();
      return a && b ? *a == *b : q.object == c;
    };
    if (q.predicate == vocab.elementCount && !std::ranges::any_of(it->second, sameCount)) {
      throw ConflictError("declared element count " + q.object.value() + " of " + q.subject.nt() +
                          " disagrees with computed count " + it->second.begin()->value());
    }
  }
  out.merge(computed);
  return out;
}

}  // namespace rbkit::metadata
