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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rbkit/rdf/iri.hpp"

namespace rbkit::metadata {

enum class StreamElementType { Triples, Quads, Graphs };

std::string_view to_string(StreamElementType type) noexcept;

struct Agent {
  std::string name;
  /// Bare ORCID iD as written by the contributor; checked by validation, not
  /// by extraction.
  std::optional<std::string> orcid;

  friend auto operator<=>(const Agent&, const Agent&) = default;
};

struct DatasetMetadata {
  rdf::Iri iri;
  std::string id;
  std::string title;
  std::string description;
  rdf::Iri license;
  /// Sorted by (name, orcid); RDF gives multi-valued properties no order.
  std::vector<Agent> creators;
  std::string useCase;
  StreamElementType streamElementType = StreamElementType::Triples;
  std::uint64_t declaredElementCount = 0;
  std::optional<rdf::Iri> sourceUrl;

  friend bool operator==(const DatasetMetadata&, const DatasetMetadata&) = default;
};

enum class Direction { HigherBetter, LowerBetter };

struct Metric {
  std::string name;
  std::string unit;
  Direction direction = Direction::LowerBetter;

  friend bool operator==(const Metric&, const Metric&) = default;
};

struct TaskMetadata {
  rdf::Iri iri;
  std::string id;
  std::string name;
  std::string description;
  std::vector<rdf::Iri> requiredProfiles;
  /// Non-empty, unique names, sorted by name.
  std::vector<Metric> metrics;

  friend bool operator==(const TaskMetadata&, const TaskMetadata&) = default;
};

enum class ConstraintKind { ElementTypeIs, MinElementCount, MaxElementCount };

struct Constraint {
  ConstraintKind kind;
  std::variant<StreamElementType, std::uint64_t> value;

  static Constraint element_type_is(StreamElementType t) { return {ConstraintKind::ElementTypeIs, t}; }
  static Constraint min_elements(std::uint64_t n) { return {ConstraintKind::MinElementCount, n}; }
  static Constraint max_elements(std::uint64_t n) { return {ConstraintKind::MaxElementCount, n}; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ProfileMetadata {
  rdf::Iri iri;
  std::string id;
  std::string name;
  std::vector<Constraint> constraints;

  friend bool operator==(const ProfileMetadata&, const ProfileMetadata&) = default;
};

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity) noexcept;

struct Violation {
  std::string path;
  Severity severity = Severity::Error;
  std::string message;
  std::string ruleId;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Findings of one validation pass. Violations are kept sorted by
/// (ruleId, path, message), so equal inputs give equal reports.
class ValidationReport {
 public:
  void add(std::string ruleId, std::string path, Severity severity, std::string message);
  void merge(const ValidationReport& other);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  bool passed() const noexcept { return violations_.empty(); }
  bool has_errors() const noexcept;
  std::size_t error_count() const noexcept;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;

 private:
  std::vector<Violation> violations_;
};

/// Curator thresholds. Defaults: CC0, CC-BY 4.0, CC-BY-SA 4.0 and ODbL;
/// at least 1000 stream elements.
struct ValidationPolicy {
  std::vector<std::string> licenseAllowList = default_license_allow_list();
  std::uint64_t minElementCount = 1000;

  static std::vector<std::string> default_license_allow_list();
};

}  // namespace rbkit::metadata
