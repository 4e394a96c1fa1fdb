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

#include <set>

#include "graph_access.hpp"
#include "rbkit/package/package.hpp"

namespace rbkit::package {

namespace {

// Blank nodes get an element-scoped key; everything else is keyed by its
// N-Triples form.
std::string term_key(const rdf::Term& t, std::size_t element) {
  if (t.is_blank()) return std::to_string(element) + ":" + t.nt();
  return t.nt();
}

}  // namespace

StatisticsReport compute_statistics(const SourceDataset& src) {
  StatisticsReport stats;
  std::set<std::string> subjects, predicates, objects;
  stats.elementCount = src.elements.size();
  for (std::size_t i = 0; i < src.elements.size(); ++i) {
    const auto& data = src.elements[i].data;
    stats.totalStatements += data.size();
    for (const auto& q : data) {
      subjects.insert(term_key(q.subject, i));
      predicates.insert(q.predicate.nt());
      objects.insert(term_key(q.object, i));
      if (q.graph) stats.usesNamedGraphs = true;
    }
  }
  stats.distinctSubjects = subjects.size();
  stats.distinctPredicates = predicates.size();
  stats.distinctObjects = objects.size();
  return stats;
}

rdf::Dataset to_rdf(const StatisticsReport& stats, const rdf::Iri& dataset,
                    const Vocabulary& vocab) {
  const auto count = [](std::uint64_t n) {
    return rdf::Term::literal(std::to_string(n), rdf::xsd::integer);
  };
  rdf::Dataset g;
  g.set_prefix("rb", vocab.ns);
  g.set_prefix("xsd", std::string(rdf::ns::xsd));
  const auto s = rdf::Term::iri(dataset);
  g.add(s, vocab.elementCount, count(stats.elementCount));
  g.add(s, vocab.statementCount, count(stats.totalStatements));
  g.add(s, vocab.distinctSubjects, count(stats.distinctSubjects));
  g.add(s, vocab.distinctPredicates, count(stats.distinctPredicates));
  g.add(s, vocab.distinctObjects, count(stats.distinctObjects));
  g.add(s, vocab.usesNamedGraphs, rdf::Term::boolean(stats.usesNamedGraphs));
  return g;
}

std::optional<StatisticsReport> statistics_from_rdf(const rdf::Dataset& graph, const rdf::Iri& dataset,
                                                    const Vocabulary& vocab) {
  const auto s = rdf::Term::iri(dataset);
  if (!detail::single_value(graph, s, vocab.statementCount, "statementCount")) return std::nullopt;
  StatisticsReport stats;
  stats.elementCount = detail::required_count(graph, s, vocab.elementCount, "elementCount");
  stats.totalStatements = detail::required_count(graph, s, vocab.statementCount, "statementCount");
  stats.distinctSubjects = detail::required_count(graph, s, vocab.distinctSubjects, "distinctSubjects");
  stats.distinctPredicates =
      detail::required_count(graph, s, vocab.distinctPredicates, "distinctPredicates");
  stats.distinctObjects = detail::required_count(graph, s, vocab.distinctObjects, "distinctObjects");
  stats.usesNamedGraphs = detail::boolean_value(
      detail::required_value(graph, s, vocab.usesNamedGraphs, "usesNamedGraphs"), "usesNamedGraphs");
  return stats;
}

}  // namespace rbkit::package
