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

#include "rbkit/nanopub/nanopub.hpp"

#include <set>

#include "rbkit/error.hpp"

namespace rbkit::nanopub {

using rdf::Term;

namespace {

bool mentions(const rdf::Dataset& g, const Term& t) {
  for (const auto& q : g) {
    if (q.subject == t || q.object == t) return true;
  }
  return false;
}

rdf::Iri single_link(const rdf::Dataset& head, const Term& np, const std::string& predicate) {
  const auto values = head.objects(np, Term::iri(predicate));
  if (values.size() != 1 || !values.front().is_iri()) {
    throw StructureError("head-links", "head must link exactly one graph IRI via <" + predicate + ">");
  }
  return rdf::Iri(values.front().value());
}

}  // namespace

Nanopublication parse_nanopub(const rdf::Dataset& doc) {
  const Term type = Term::iri(rdf::rdfns::type);
  const Term npClass = Term::iri(np::Nanopublication);

  std::optional<Term> headName;
  std::optional<Term> npTerm;
  for (const auto& q : doc) {
    if (!q.graph || !q.graph->is_iri() || q.predicate != type || q.object != npClass) continue;
    if ((headName && *headName != *q.graph) || (npTerm && *npTerm != q.subject)) {
      throw StructureError("head-links", "more than one nanopublication head");
    }
    headName = q.graph;
    npTerm = q.subject;
  }
  if (!headName) throw StructureError("head-links", "no graph declares an np:Nanopublication");
  if (!npTerm->is_iri()) throw StructureError("head-links", "the nanopublication must be an IRI");

  rdf::Dataset head = doc.graph(headName);
  Nanopublication out{
      .uri = rdf::Iri(npTerm->value()),
      .headGraph = rdf::Iri(headName->value()),
      .assertionGraph = single_link(head, *npTerm, np::hasAssertion),
      .provenanceGraph = single_link(head, *npTerm, np::hasProvenance),
      .pubinfoGraph = single_link(head, *npTerm, np::hasPublicationInfo),
      .head = std::move(head),
      .assertion = {},
      .provenance = {},
      .pubinfo = {},
  };

  const Term a = Term::iri(out.assertionGraph);
  const Term p = Term::iri(out.provenanceGraph);
  const Term i = Term::iri(out.pubinfoGraph);
  const std::set<Term> four{Term::iri(out.headGraph), a, p, i};
  if (four.size() != 4) throw StructureError("head-links", "the four graph IRIs must be distinct");

  out.assertion = doc.graph(a);
  out.provenance = doc.graph(p);
  out.pubinfo = doc.graph(i);
  if (out.assertion.empty()) throw StructureError("empty-assertion", "assertion graph is empty");
  if (out.provenance.empty()) throw StructureError("missing-provenance", "no provenance graph");
  if (out.pubinfo.empty()) throw StructureError("missing-pubinfo", "no publication info graph");

  if (!doc.graph(std::nullopt).empty()) {
    throw StructureError("graph-count", "the default graph must be empty");
  }
  const auto names = doc.graph_names();
  if (names.size() != 4) {
    throw StructureError("graph-count", "expected 4 graphs, found " + std::to_string(names.size()));
  }

  if (!mentions(out.provenance, a)) {
    throw StructureError("provenance-link", "provenance does not mention the assertion graph");
  }
  if (!mentions(out.pubinfo, *npTerm)) {
    throw StructureError("pubinfo-link", "publication info does not mention the nanopublication");
  }
  return out;
}

rdf::Dataset Nanopublication::to_dataset() const {
  rdf::Dataset out;
  out.set_prefix("np", std::string(np::ns));
  out.set_prefix("dct", std::string(dct::ns));
  out.set_prefix("prov", std::string(prov::ns));
  out.set_prefix("xsd", std::string(rdf::ns::xsd));
  out.set_prefix("rdf", std::string(rdf::ns::rdf));
  out.set_prefix("rb", Vocabulary::standard().ns);
  for (const auto& [name, iri] : assertion.prefixes()) out.set_prefix(name, iri);
  out.merge(head.with_graph(Term::iri(headGraph)));
  out.merge(assertion.with_graph(Term::iri(assertionGraph)));
  out.merge(provenance.with_graph(Term::iri(provenanceGraph)));
  out.merge(pubinfo.with_graph(Term::iri(pubinfoGraph)));
  return out;
}

}  // namespace rbkit::nanopub
