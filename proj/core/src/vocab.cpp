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

#include "rbkit/vocab.hpp"

#include <utility>

namespace rbkit {

Vocabulary::Vocabulary(std::string namespaceIri)
    : ns(std::move(namespaceIri)),
      Dataset(term("Dataset")),
      Task(term("Task")),
      Profile(term("Profile")),
      Agent(term("Agent")),
      Metric(term("Metric")),
      Constraint(term("Constraint")),
      Distribution(term("Distribution")),
      BenchmarkRunReport(term("BenchmarkRunReport")),
      EvaluatedSystem(term("EvaluatedSystem")),
      ValidationReport(term("ValidationReport")),
      Violation(term("Violation")),
      identifier(term("identifier")),
      title(term("title")),
      name(term("name")),
      description(term("description")),
      license(term("license")),
      creator(term("creator")),
      orcid(term("orcid")),
      useCase(term("useCase")),
      streamElementType(term("streamElementType")),
      elementCount(term("elementCount")),
      sourceUrl(term("sourceUrl")),
      Triples(term("Triples")),
      Quads(term("Quads")),
      Graphs(term("Graphs")),
      statementCount(term("statementCount")),
      distinctSubjects(term("distinctSubjects")),
      distinctPredicates(term("distinctPredicates")),
      distinctObjects(term("distinctObjects")),
      usesNamedGraphs(term("usesNamedGraphs")),
      distribution(term("distribution")),
      distributionKind(term("distributionKind")),
      mediaType(term("mediaType")),
      sizeCap(term("sizeCap")),
      byteSize(term("byteSize")),
      sha256(term("sha256")),
      fileName(term("fileName")),
      Flat(term("Flat")),
      Stream(term("Stream")),
      requiredProfile(term("requiredProfile")),
      metric(term("metric")),
      unit(term("unit")),
      direction(term("direction")),
      HigherBetter(term("HigherBetter")),
      LowerBetter(term("LowerBetter")),
      constraint(term("constraint")),
      constraintKind(term("constraintKind")),
      constraintValue(term("constraintValue")),
      ElementTypeIs(term("ElementTypeIs")),
      MinElementCount(term("MinElementCount")),
      MaxElementCount(term("MaxElementCount")),
      task(term("task")),
      profile(term("profile")),
      profileVersion(term("profileVersion")),
      benchmarkCode(term("benchmarkCode")),
      evaluatedSystems(term("evaluatedSystems")),
      systemName(term("systemName")),
      systemVersion(term("systemVersion")),
      resultsLink(term("resultsLink")),
      conforms(term("conforms")),
      violation(term("violation")),
      ruleId(term("ruleId")),
      path(term("path")),
      severity(term("severity")),
      message(term("message")),
      Error(term("Error")),
      Warning(term("Warning")) {}

const Vocabulary& Vocabulary::standard() {
  static const Vocabulary instance;
  return instance;
}

rdf::Term Vocabulary::term(std::string_view local) const {
  return rdf::Term::iri(ns + std::string(local));
}

}  // namespace rbkit
