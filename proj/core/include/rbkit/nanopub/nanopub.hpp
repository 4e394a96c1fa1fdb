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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rbkit/rdf/dataset.hpp"
#include "rbkit/vocab.hpp"

namespace rbkit::nanopub {

/// A nanopublication split into its four graphs. Each graph is held with its
/// quads moved to the default graph; the graph IRIs are kept alongside.
struct Nanopublication {
  rdf::Iri uri;
  rdf::Iri headGraph;
  rdf::Iri assertionGraph;
  rdf::Iri provenanceGraph;
  rdf::Iri pubinfoGraph;
  rdf::Dataset head;
  rdf::Dataset assertion;
  rdf::Dataset provenance;
  rdf::Dataset pubinfo;

  /// The four named graphs reassembled, with the usual prefixes set.
  rdf::Dataset to_dataset() const;
};

/// Splits `doc` into the four graphs and checks the structure rules, in this
/// order. The first failure is raised as StructureError(rule):
///
///   head-links          exactly one graph types a subject np:Nanopublication,
///                       linking one IRI each via hasAssertion,
///                       hasProvenance and hasPublicationInfo
///   empty-assertion     the assertion graph has no statements
///   missing-provenance  the provenance graph has no statements
///   missing-pubinfo     the publication info graph has no statements
///   graph-count         the default graph is non-empty, or the graphs are
///                       not exactly head, assertion, provenance, pubinfo
///   provenance-link     provenance never mentions the assertion graph IRI
///   pubinfo-link        publication info never mentions the nanopub IRI
Nanopublication parse_nanopub(const rdf::Dataset& doc);

struct EvaluatedSystem {
  std::string name;
  std::string version;

  friend bool operator==(const EvaluatedSystem&, const EvaluatedSystem&) = default;
};

struct BenchmarkRunReport {
  /// IRI of the nanopublication carrying the report.
  rdf::Iri reportIri;
  rdf::Iri task;
  rdf::Iri profile;
  std::string profileVersion;
  rdf::Iri benchmarkCode;
  /// In the order the report lists them.
  std::vector<EvaluatedSystem> systems;
  /// Bare 16-digit form, e.g. 0000-0002-1825-0097.
  std::string authorOrcid;
  std::chrono::year_month_day date;
  std::optional<rdf::Iri> resultsLink;

  friend bool operator==(const BenchmarkRunReport&, const BenchmarkRunReport&) = default;
};

/// Reads the report from the assertion graph, the author from the
/// publication info (dct:creator, falling back to prov:wasAttributedTo in the
/// provenance graph) and the date from dct:created on the nanopub IRI.
///
/// Throws MissingFieldError(field) and TypeMismatchError(field) with field in
/// task, profile, profileVersion, benchmarkCode, systems, authorOrcid, date,
/// resultsLink. An ORCID with a wrong check digit is a TypeMismatchError.
BenchmarkRunReport extract_report(const Nanopublication& np,
                                  const Vocabulary& vocab = Vocabulary::standard());

/// A nanopublication whose IRI is report.reportIri; the same IRI is the
/// subject of the report in the assertion. Graph IRIs are
/// `<base>/Head`, `<base>/assertion`, `<base>/provenance` and
/// `<base>/pubinfo` (no slash is added when base ends in '/' or '#'); base
/// defaults to the report IRI.
///
/// Throws MissingFieldError("systems") for an empty system list and
/// MissingFieldError / TypeMismatchError for blank or malformed fields.
Nanopublication build_report_nanopub(const BenchmarkRunReport& report,
                                     const std::optional<rdf::Iri>& base = std::nullopt,
                                     const Vocabulary& vocab = Vocabulary::standard());

/// YYYY-MM-DD.
std::string format_date(const std::chrono::year_month_day& date);
/// Accepts YYYY-MM-DD, optionally followed by a time part; nullopt otherwise.
std::optional<std::chrono::year_month_day> parse_date(std::string_view text);

}  // namespace rbkit::nanopub
