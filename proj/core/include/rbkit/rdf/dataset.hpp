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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rbkit/rdf/term.hpp"

namespace rbkit::rdf {

/// One statement. An empty `graph` means the default graph.
struct Quad {
  Term subject;
  Term predicate;
  Term object;
  std::optional<Term> graph;

  /// Validates term positions: subject and graph are IRIs or blank nodes, the
  /// predicate is an IRI.
  static Quad make(Term subject, Term predicate, Term object,
                   std::optional<Term> graph = std::nullopt);

  bool in_default_graph() const noexcept { return !graph.has_value(); }
  bool has_blank_nodes() const noexcept;

  friend bool operator==(const Quad&, const Quad&) = default;
};

/// Total order over quads: graph, subject, predicate, object; each compared by
/// term kind rank and then code-point-wise on the N-Quads form. The default
/// graph sorts before every named graph.
std::strong_ordering canonical_quad_order(const Quad& a, const Quad& b) noexcept;

inline bool operator<(const Quad& a, const Quad& b) noexcept {
  return canonical_quad_order(a, b) < 0;
}

/// A set of quads plus prefix hints. Prefixes only steer serialization; they
/// take no part in equality or isomorphism.
class Dataset {
 public:
  using Container = std::set<Quad>;
  using const_iterator = Container::const_iterator;

  Dataset() = default;
  Dataset(std::initializer_list<Quad> quads) : quads_(quads) {}

  bool add(Quad quad) { return quads_.insert(std::move(quad)).second; }
  void add(const Term& s, const Term& p, const Term& o,
           const std::optional<Term>& g = std::nullopt) {
    add(Quad::make(s, p, o, g));
  }
  void merge(const Dataset& other);
  bool erase(const Quad& quad) { return quads_.erase(quad) > 0; }
  bool contains(const Quad& quad) const { return quads_.contains(quad); }

  std::size_t size() const noexcept { return quads_.size(); }
  bool empty() const noexcept { return quads_.empty(); }
  const_iterator begin() const noexcept { return quads_.begin(); }
  const_iterator end() const noexcept { return quads_.end(); }
  const Container& quads() const noexcept { return quads_; }

  void set_prefix(std::string name, std::string iri) { prefixes_[std::move(name)] = std::move(iri); }
  const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }

  bool has_named_graphs() const noexcept;
  /// Distinct named graph labels, in canonical order.
  std::vector<Term> graph_names() const;
  /// Distinct blank nodes in any position, in canonical order.
  std::vector<Term> blank_nodes() const;

  /// Quads of one graph, moved into the default graph.
  Dataset graph(const std::optional<Term>& name) const;
  /// Every quad moved into `name` (or the default graph).
  Dataset with_graph(const std::optional<Term>& name) const;

  /// Objects of (subject, predicate, *) in the default graph.
  std::vector<Term> objects(const Term& subject, const Term& predicate) const;
  /// Subjects of (*, predicate, object) in the default graph.
  std::vector<Term> subjects(const Term& predicate, const Term& object) const;

  /// Applies `rename` to every blank node.
  Dataset map_blank_nodes(const std::function<Term(const Term&)>& rename) const;

  friend bool operator==(const Dataset& a, const Dataset& b) { return a.quads_ == b.quads_; }

 private:
  Container quads_;
  std::map<std::string, std::string> prefixes_;
};

/// Prefixes every blank-node label with `prefix`, keeping blank nodes of
/// different datasets apart when they are merged.
Dataset scope_blank_nodes(const Dataset& dataset, const std::string& prefix);

}  // namespace rbkit::rdf
