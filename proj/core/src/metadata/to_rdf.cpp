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

#include "rbkit/metadata/metadata.hpp"
#include "rbkit/orcid.hpp"

namespace rbkit::metadata {

using rdf::Term;

namespace {

Term type_term() { return Term::iri(rdf::rdfns::type); }

Term element_type_term(StreamElementType t, const Vocabulary& vocab) {
  switch (t) {
    case StreamElementType::Triples: return vocab.Triples;
    case StreamElementType::Quads: return vocab.Quads;
    case StreamElementType::Graphs: return vocab.Graphs;
  }
  return vocab.Triples;
}

Term count_term(std::uint64_t n) { return Term::literal(std::to_string(n), rdf::xsd::integer); }

}  // namespace

void add_standard_prefixes(rdf::Dataset& graph, const Vocabulary& vocab) {
  graph.set_prefix("rdf", std::string(rdf::ns::rdf));
  graph.set_prefix("xsd", std::string(rdf::ns::xsd));
  graph.set_prefix("rb", vocab.ns);
}

rdf::Dataset to_rdf(const DatasetMetadata& md, const Vocabulary& vocab) {
  rdf::Dataset g;
  add_standard_prefixes(g, vocab);
  const Term s = Term::iri(md.iri);
  g.add(s, type_term(), vocab.Dataset);
  g.add(s, vocab.identifier, Term::literal(md.id));
  g.add(s, vocab.title, Term::literal(md.title));
  g.add(s, vocab.description, Term::literal(md.description));
  g.add(s, vocab.license, Term::iri(md.license));
  for (std::size_t i = 0; i < md.creators.size(); ++i) {
    const auto& agent = md.creators[i];
    const Term node = Term::blank("creator" + std::to_string(i));
    g.add(s, vocab.creator, node);
    g.add(node, type_term(), vocab.Agent);
    if (!agent.name.empty()) g.add(node, vocab.name, Term::literal(agent.name));
    if (agent.orcid) {
      g.add(node, vocab.orcid,
            Orcid::parse(*agent.orcid) ? Term::iri(std::string(Orcid::kIriPrefix) + *agent.orcid)
                                       : Term::literal(*agent.orcid));
    }
  }
  if (!md.useCase.empty()) g.add(s, vocab.useCase, Term::literal(md.useCase));
  g.add(s, vocab.streamElementType, element_type_term(md.streamElementType, vocab));
  g.add(s, vocab.elementCount, count_term(md.declaredElementCount));
  if (md.sourceUrl) g.add(s, vocab.sourceUrl, Term::iri(*md.sourceUrl));
  return g;
}

rdf::Dataset to_rdf(const TaskMetadata& md, const Vocabulary& vocab) {
  rdf::Dataset g;
  add_standard_prefixes(g, vocab);
  const Term s = Term::iri(md.iri);
  g.add(s, type_term(), vocab.Task);
  g.add(s, vocab.identifier, Term::literal(md.id));
  g.add(s, vocab.name, Term::literal(md.name));
  g.add(s, vocab.description, Term::literal(md.description));
  for (const auto& p : md.requiredProfiles) g.add(s, vocab.requiredProfile, Term::iri(p));
  for (std::size_t i = 0; i < md.metrics.size(); ++i) {
    const auto& m = md.metrics[i];
    const Term node = Term::blank("metric" + std::to_string(i));
    g.add(s, vocab.metric, node);
    g.add(node, type_term(), vocab.Metric);
    g.add(node, vocab.name, Term::literal(m.name));
    if (!m.unit.empty()) g.add(node, vocab.unit, Term::literal(m.unit));
    g.add(node, vocab.direction,
          m.direction == Direction::HigherBetter ? vocab.HigherBetter : vocab.LowerBetter);
  }
  return g;
}

rdf::Dataset to_rdf(const ProfileMetadata& md, const Vocabulary& vocab) {
  rdf::Dataset g;
  add_standard_prefixes(g, vocab);
  const Term s = Term::iri(md.iri);
  g.add(s, type_term(), vocab.Profile);
  g.add(s, vocab.identifier, Term::literal(md.id));
  g.add(s, vocab.name, Term::literal(md.name));
  for (std::size_t i = 0; i < md.constraints.size(); ++i) {
    const auto& c = md.constraints[i];
    const Term node = Term::blank("constraint" + std::to_string(i));
    g.add(s, vocab.constraint, node);
    g.add(node, type_term(), vocab.Constraint);
    switch (c.kind) {
      case ConstraintKind::ElementTypeIs:
        g.add(node, vocab.constraintKind, vocab.ElementTypeIs);
        g.add(node, vocab.constraintValue,
              element_type_term(std::get<StreamElementType>(c.value), vocab));
        break;
      case ConstraintKind::MinElementCount:
        g.add(node, vocab.constraintKind, vocab.MinElementCount);
        g.add(node, vocab.constraintValue, count_term(std::get<std::uint64_t>(c.value)));
        break;
      case ConstraintKind::MaxElementCount:
        g.add(node, vocab.constraintKind, vocab.MaxElementCount);
        g.add(node, vocab.constraintValue, count_term(std::get<std::uint64_t>(c.value)));
        break;
    }
  }
  return g;
}

rdf::Dataset to_rdf(const ValidationReport& report, const std::optional<rdf::Iri>& subject,
                    const Vocabulary& vocab) {
  rdf::Dataset g;
  add_standard_prefixes(g, vocab);
  const Term s = subject ? Term::iri(*subject) : Term::blank("report");
  g.add(s, type_term(), vocab.ValidationReport);
  g.add(s, vocab.conforms, Term::boolean(!report.has_errors()));
  const auto& violations = report.violations();
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    const Term node = Term::blank("violation" + std::to_string(i));
    g.add(s, vocab.violation, node);
    g.add(node, type_term(), vocab.Violation);
    g.add(node, vocab.ruleId, Term::literal(v.ruleId));
    g.add(node, vocab.path, Term::literal(v.path));
    g.add(node, vocab.severity, v.severity == Severity::Error ? vocab.Error : vocab.Warning);
    g.add(node, vocab.message, Term::literal(v.message));
  }
  return g;
}

}  // namespace rbkit::metadata
