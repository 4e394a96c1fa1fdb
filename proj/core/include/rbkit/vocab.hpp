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

#include <string>
#include <string_view>

#include "rbkit/rdf/term.hpp"

namespace rbkit {

/// Version of the registry vocabulary below. Bump on any incompatible change
/// to term names.
inline constexpr std::string_view kVocabularyVersion = "1.0";
inline constexpr std::string_view kDefaultVocabularyNamespace = "https://w3id.org/rbkit/vocab/1.0#";

/// Every predicate and class the registry reads or writes, resolved against
/// one namespace. Terms from other vocabularies (nanopub schema, Dublin Core,
/// PROV) are fixed and live in their own namespaces below.
struct Vocabulary {
  explicit Vocabulary(std::string ns = std::string(kDefaultVocabularyNamespace));

  static const Vocabulary& standard();

  rdf::Term term(std::string_view local) const;

  std::string ns;

  // Classes.
  rdf::Term Dataset, Task, Profile, Agent, Metric, Constraint, Distribution,
      BenchmarkRunReport, EvaluatedSystem, ValidationReport, Violation;

  // Shared descriptive properties.
  rdf::Term identifier, title, name, description;

  // Dataset.
  rdf::Term license, creator, orcid, useCase, streamElementType, elementCount, sourceUrl;
  rdf::Term Triples, Quads, Graphs;

  // Statistics and distributions (computed; functional for enrichment).
  rdf::Term statementCount, distinctSubjects, distinctPredicates, distinctObjects,
      usesNamedGraphs, distribution, distributionKind, mediaType, sizeCap, byteSize, sha256,
      fileName;
  rdf::Term Flat, Stream;

  // Task.
  rdf::Term requiredProfile, metric, unit, direction, HigherBetter, LowerBetter;

  // Profile.
  rdf::Term constraint, constraintKind, constraintValue, ElementTypeIs, MinElementCount,
      MaxElementCount;

  // Benchmark run report.
  rdf::Term task, profile, profileVersion, benchmarkCode, evaluatedSystems, systemName,
      systemVersion, resultsLink;

  // Validation report.
  rdf::Term conforms, violation, ruleId, path, severity, message, Error, Warning;
};

namespace np {
inline constexpr std::string_view ns = "http://www.nanopub.org/nschema#";
inline const std::string Nanopublication = "http://www.nanopub.org/nschema#Nanopublication";
inline const std::string hasAssertion = "http://www.nanopub.org/nschema#hasAssertion";
inline const std::string hasProvenance = "http://www.nanopub.org/nschema#hasProvenance";
inline const std::string hasPublicationInfo = "http://www.nanopub.org/nschema#hasPublicationInfo";
}  // namespace np

namespace dct {
inline constexpr std::string_view ns = "http://purl.org/dc/terms/";
inline const std::string creator = "http://purl.org/dc/terms/creator";
inline const std::string created = "http://purl.org/dc/terms/created";
}  // namespace dct

namespace prov {
inline constexpr std::string_view ns = "http://www.w3.org/ns/prov#";
inline const std::string wasAttributedTo = "http://www.w3.org/ns/prov#wasAttributedTo";
}  // namespace prov

}  // namespace rbkit
