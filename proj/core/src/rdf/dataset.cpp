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

#include "rbkit/rdf/dataset.hpp"

#include <utility>

#include "rbkit/error.hpp"

namespace rbkit::rdf {

namespace {

std::strong_ordering compare_graph(const std::optional<Term>& a,
                                   const std::optional<Term>& b) noexcept {
  if (!a || !b) return a.has_value() <=> b.has_value();
  return *a <=> *b;
}

}  // namespace

Quad Quad::make(Term subject, Term predicate, Term object, std::optional<Term> graph) {
  if (subject.is_literal()) throw Error("literal in subject position: " + subject.nt());
  if (!predicate.is_iri()) throw Error("predicate must be an IRI: " + predicate.nt());
  if (graph && graph->is_literal()) throw Error("literal as graph name: " + graph->nt());
  return Quad{std::move(subject), std::move(predicate), std::move(object), std::move(graph)};
}

bool Quad::has_blank_nodes() const noexcept {
  return subject.is_blank() || object.is_blank() || (graph && graph->is_blank());
}

std::strong_ordering canonical_quad_order(const Quad& a, const Quad& b) noexcept {
  if (auto c = compare_graph(a.graph, b.graph); c != 0) return c;
  if (auto c = a.subject <=> b.subject; c != 0) return c;
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return a.object <=> b.object;
}

void Dataset::merge(const Dataset& other) {
  quads_.insert(other.quads_.begin(), other.quads_.end());
  for (const auto& [name, iri] : other.prefixes_) prefixes_.emplace(name, iri);
}

bool Dataset::has_named_graphs() const noexcept {
  // The default graph sorts first, so a named graph exists iff the last quad has one.
  return !quads_.empty() && quads_.rbegin()->graph.has_value();
}

std::vector<Term> Dataset::graph_names() const {
  std::vector<Term> out;
  for (const auto& q : quads_) {
    if (q.graph && (out.empty() || out.back() != *q.graph)) out.push_back(*q.graph);
  }
  return out;
}

std::vector<Term> Dataset::blank_nodes() const {
  std::set<Term> seen;
  for (const auto& q : quads_) {
    if (q.subject.is_blank()) seen.insert(q.subject);
    if (q.object.is_blank()) seen.insert(q.object);
    if (q.graph && q.graph->is_blank()) seen.insert(*q.graph);
  }
  return {seen.begin(), seen.end()};
}

Dataset Dataset::graph(const std::optional<Term>& name) const {
  Dataset out;
  out.prefixes_ = prefixes_;
  for (const auto& q : quads_) {
    if (q.graph == name) out.quads_.insert(Quad{q.subject, q.predicate, q.object, std::nullopt});
  }
  return out;
}

Dataset Dataset::with_graph(const std::optional<Term>& name) const {
  if (name && name->is_literal()) throw Error("literal as graph name: " + name->nt());
  Dataset out;
  out.prefixes_ = prefixes_;
  for (const auto& q : quads_) out.quads_.insert(Quad{q.subject, q.predicate, q.object, name});
  return out;
}

std::vector<Term> Dataset::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  for (const auto& q : quads_) {
    if (!q.graph && q.subject == subject && q.predicate == predicate) out.push_back(q.object);
  }
  return out;
}

std::vector<Term> Dataset::subjects(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const auto& q : quads_) {
    if (!q.graph && q.predicate == predicate && q.object == object) out.push_back(q.subject);
  }
  return out;
}

Dataset Dataset::map_blank_nodes(const std::function<Term(const Term&)>& rename) const {
  auto map = [&](const Term& t) { return t.is_blank() ? rename(t) : t; };
  Dataset out;
  out.prefixes_ = prefixes_;
  for (const auto& q : quads_) {
    out.quads_.insert(Quad{map(q.subject), q.predicate, map(q.object),
                           q.graph ? std::optional<Term>(map(*q.graph)) : std::nullopt});
  }
  return out;
}

Dataset scope_blank_nodes(const Dataset& dataset, const std::string& prefix) {
  return dataset.map_blank_nodes([&](const Term& t) { return Term::blank(prefix + t.value()); });
}

}  // namespace rbkit::rdf
