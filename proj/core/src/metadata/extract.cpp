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
#include <set>

#include "graph_access.hpp"
#include "rbkit/error.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/orcid.hpp"

namespace rbkit::metadata {

using detail::literal_text;
using detail::optional_iri;
using detail::optional_literal;
using detail::required_count;
using detail::required_iri;
using detail::required_literal;
using detail::required_value;

namespace {

StreamElementType element_type_from(const rdf::Term& t, const Vocabulary& vocab,
                                    const std::string& field) {
  if (t == vocab.Triples) return StreamElementType::Triples;
  if (t == vocab.Quads) return StreamElementType::Quads;
  if (t == vocab.Graphs) return StreamElementType::Graphs;
  throw TypeMismatchError(field, "unknown stream element type " + t.nt());
}

Agent extract_agent(const rdf::Dataset& g, const rdf::Term& node, const Vocabulary& vocab) {
  if (node.is_literal()) throw TypeMismatchError("creators", "creator must be a node, not a literal");
  Agent agent;
  agent.name = optional_literal(g, node, vocab.name, "creators.name").value_or("");
  if (auto orcid = detail::single_value(g, node, vocab.orcid, "creators.orcid")) {
    std::string text = orcid->value();
    for (const std::string_view prefix : {std::string_view("https://orcid.org/"),
                                          std::string_view("http://orcid.org/")}) {
      if (orcid->is_iri() && text.starts_with(prefix)) text.erase(0, prefix.size());
    }
    agent.orcid = std::move(text);
  } else if (node.is_iri()) {
    if (auto id = Orcid::parse(node.value())) agent.orcid = id->str();
  }
  return agent;
}

}  // namespace

std::vector<rdf::Iri> typed_subjects(const rdf::Dataset& graph, const rdf::Term& type) {
  std::vector<rdf::Iri> out;
  for (const auto& s : graph.subjects(rdf::Term::iri(rdf::rdfns::type), type)) {
    if (s.is_iri()) out.emplace_back(s.value());
  }
  return out;
}

rdf::Iri single_typed_subject(const rdf::Dataset& graph, const rdf::Term& type) {
  auto subjects = typed_subjects(graph, type);
  if (subjects.empty()) throw MissingFieldError("type");
  if (subjects.size() > 1) {
    throw TypeMismatchError("type", "several subjects typed " + type.nt());
  }
  return subjects.front();
}

DatasetMetadata extract_dataset_metadata(const rdf::Dataset& g, const rdf::Iri& subject,
                                         const Vocabulary& vocab) {
  const rdf::Term s = rdf::Term::iri(subject);
  DatasetMetadata md{
      .iri = subject,
      .id = required_literal(g, s, vocab.identifier, "id"),
      .title = required_literal(g, s, vocab.title, "title"),
      .description = required_literal(g, s, vocab.description, "description"),
      .license = required_iri(g, s, vocab.license, "license"),
      .creators = {},
      .useCase = {},
      .streamElementType = {},
      .declaredElementCount = 0,
      .sourceUrl = std::nullopt,
  };
  for (const auto& node : g.objects(s, vocab.creator)) {
    md.creators.push_back(extract_agent(g, node, vocab));
  }
  std::ranges::sort(md.creators);
  md.useCase = optional_literal(g, s, vocab.useCase, "useCase").value_or("");
  md.streamElementType = element_type_from(
      required_value(g, s, vocab.streamElementType, "streamElementType"), vocab,
      "streamElementType");
  md.declaredElementCount = required_count(g, s, vocab.elementCount, "declaredElementCount");
  md.sourceUrl = optional_iri(g, s, vocab.sourceUrl, "sourceUrl");
  return md;
}

TaskMetadata extract_task_metadata(const rdf::Dataset& g, const rdf::Iri& subject,
                                   const Vocabulary& vocab) {
  const rdf::Term s = rdf::Term::iri(subject);
  TaskMetadata md{
      .iri = subject,
      .id = required_literal(g, s, vocab.identifier, "id"),
      .name = required_literal(g, s, vocab.name, "name"),
      .description = required_literal(g, s, vocab.description, "description"),
      .requiredProfiles = {},
      .metrics = {},
  };
  for (const auto& p : g.objects(s, vocab.requiredProfile)) {
    md.requiredProfiles.push_back(detail::iri_value(p, "requiredProfiles"));
  }
  std::ranges::sort(md.requiredProfiles);

  const auto nodes = g.objects(s, vocab.metric);
  if (nodes.empty()) throw MissingFieldError("metrics");
  for (const auto& node : nodes) {
    if (node.is_literal()) throw TypeMismatchError("metrics", "metric must be a node");
    Metric m;
    m.name = required_literal(g, node, vocab.name, "metrics.name");
    m.unit = optional_literal(g, node, vocab.unit, "metrics.unit").value_or("");
    const rdf::Term dir = required_value(g, node, vocab.direction, "metrics.direction");
    if (dir == vocab.HigherBetter) {
      m.direction = Direction::HigherBetter;
    } else if (dir == vocab.LowerBetter) {
      m.direction = Direction::LowerBetter;
    } else {
      throw TypeMismatchError("metrics.direction", "unknown direction " + dir.nt());
    }
    md.metrics.push_back(std::move(m));
  }
  std::ranges::sort(md.metrics, {}, &Metric::name);
  for (std::size_t i = 1; i < md.metrics.size(); ++i) {
    if (md.metrics[i].name == md.metrics[i - 1].name) {
      throw TypeMismatchError("metrics", "duplicate name");
    }
  }
  return md;
}

ProfileMetadata extract_profile_metadata(const rdf::Dataset& g, const rdf::Iri& subject,
                                         const Vocabulary& vocab) {
  const rdf::Term s = rdf::Term::iri(subject);
  ProfileMetadata md{
      .iri = subject,
      .id = required_literal(g, s, vocab.identifier, "id"),
      .name = required_literal(g, s, vocab.name, "name"),
      .constraints = {},
  };
  std::optional<std::uint64_t> min;
  std::optional<std::uint64_t> max;
  for (const auto& node : g.objects(s, vocab.constraint)) {
    if (node.is_literal()) throw TypeMismatchError("constraints", "constraint must be a node");
    const rdf::Term kind = required_value(g, node, vocab.constraintKind, "constraints.kind");
    const rdf::Term value = required_value(g, node, vocab.constraintValue, "constraints.value");
    if (kind == vocab.ElementTypeIs) {
      md.constraints.push_back(
          Constraint::element_type_is(element_type_from(value, vocab, "constraints.value")));
    } else if (kind == vocab.MinElementCount) {
      const auto n = detail::count_value(value, "constraints.value");
      min = std::max(min.value_or(0), n);
      md.constraints.push_back(Constraint::min_elements(n));
    } else if (kind == vocab.MaxElementCount) {
      const auto n = detail::count_value(value, "constraints.value");
      max = max ? std::min(*max, n) : n;
      md.constraints.push_back(Constraint::max_elements(n));
    } else {
      throw TypeMismatchError("constraints.kind", "unknown constraint kind " + kind.nt());
    }
  }
  if (min && max && *min > *max) {
    throw TypeMismatchError("constraints", "minimum element count exceeds maximum");
  }
  std::ranges::sort(md.constraints, [](const Constraint& a, const Constraint& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.value < b.value;
  });
  return md;
}

}  // namespace rbkit::metadata
