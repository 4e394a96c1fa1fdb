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

#include "rbkit/rdf/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "rbkit/error.hpp"
#include "refine.hpp"

namespace rbkit::rdf {

namespace {

using detail::BlankGraph;
using detail::Coloring;

std::map<std::uint64_t, std::vector<Term>> classes_of(const Coloring& colors) {
  std::map<std::uint64_t, std::vector<Term>> out;
  for (const auto& [node, color] : colors) out[color].push_back(node);
  return out;
}

bool same_histogram(const std::map<std::uint64_t, std::vector<Term>>& a,
                    const std::map<std::uint64_t, std::vector<Term>>& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
  }
  return true;
}

class Matcher {
 public:
  Matcher(const Dataset& a, const Dataset& b) : a_(a), b_(b), ga_(a), gb_(b) {}

  std::optional<std::map<Term, Term>> run(const IsomorphismOptions& options) {
    Coloring ca = detail::refine(ga_, ga_.uniform_coloring());
    Coloring cb = detail::refine(gb_, gb_.uniform_coloring());
    const auto classesA = classes_of(ca);
    if (!same_histogram(classesA, classes_of(cb))) return std::nullopt;

    std::size_t ambiguous = 0;
    for (const auto& [_, members] : classesA) {
      if (members.size() > 1) ambiguous += members.size();
    }
    if (ambiguous > options.maxAmbiguousBlankNodes) {
      throw ComplexityLimitError(ambiguous, options.maxAmbiguousBlankNodes);
    }
    return search(std::move(ca), std::move(cb));
  }

 private:
  std::optional<std::map<Term, Term>> search(Coloring ca, Coloring cb) {
    const auto classesA = classes_of(ca);
    const auto classesB = classes_of(cb);
    if (!same_histogram(classesA, classesB)) return std::nullopt;

    const std::vector<Term>* pickA = nullptr;
    const std::vector<Term>* pickB = nullptr;
    for (const auto& [color, members] : classesA) {
      if (members.size() > 1 && (!pickA || members.size() < pickA->size())) {
        pickA = &members;
        pickB = &classesB.at(color);
      }
    }
    if (!pickA) {
      std::map<Term, Term> mapping;
      for (const auto& [color, members] : classesA) {
        mapping.emplace(members.front(), classesB.at(color).front());
      }
      if (verify(mapping)) return mapping;
      return std::nullopt;
    }

    // Individualize one node of A against each candidate in B.
    const Term& node = pickA->front();
    const std::uint64_t marker = detail::fnv1a("individualized", ca.at(node) + ++depth_);
    for (const Term& candidate : *pickB) {
      Coloring nextA = ca;
      Coloring nextB = cb;
      nextA[node] = marker;
      nextB[candidate] = marker;
      nextA = detail::refine(ga_, std::move(nextA));
      nextB = detail::refine(gb_, std::move(nextB));
      if (auto found = search(std::move(nextA), std::move(nextB))) return found;
    }
    return std::nullopt;
  }

  bool verify(const std::map<Term, Term>& mapping) const {
    auto map = [&](const Term& t) { return t.is_blank() ? mapping.at(t) : t; };
    for (const auto& q : a_) {
      if (!q.has_blank_nodes()) continue;
      Quad image{map(q.subject), q.predicate, map(q.object),
                 q.graph ? std::optional<Term>(map(*q.graph)) : std::nullopt};
      if (!b_.contains(image)) return false;
    }
    return true;
  }

  const Dataset& a_;
  const Dataset& b_;
  BlankGraph ga_;
  BlankGraph gb_;
  std::uint64_t depth_ = 0;
};

}  // namespace

std::optional<std::map<Term, Term>> find_blank_node_bijection(
    const Dataset& a, const Dataset& b, const IsomorphismOptions& options) {
  if (a.size() != b.size()) return std::nullopt;

  std::size_t blankQuadsA = 0;
  std::size_t blankQuadsB = 0;
  for (const auto& q : a) {
    if (q.has_blank_nodes()) {
      ++blankQuadsA;
    } else if (!b.contains(q)) {
      return std::nullopt;
    }
  }
  for (const auto& q : b) {
    if (q.has_blank_nodes()) ++blankQuadsB;
  }
  if (blankQuadsA != blankQuadsB) return std::nullopt;
  if (blankQuadsA == 0) return std::map<Term, Term>{};

  return Matcher(a, b).run(options);
}

bool dataset_isomorphic(const Dataset& a, const Dataset& b, const IsomorphismOptions& options) {
  return find_blank_node_bijection(a, b, options).has_value();
}

}  // namespace rbkit::rdf
