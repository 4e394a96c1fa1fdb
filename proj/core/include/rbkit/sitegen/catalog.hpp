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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbkit/metadata/types.hpp"
#include "rbkit/nanopub/nanopub.hpp"
#include "rbkit/package/package.hpp"
#include "rbkit/rdf/dataset.hpp"
#include "rbkit/vocab.hpp"

namespace rbkit::sitegen {

struct DatasetEntry {
  metadata::DatasetMetadata metadata;
  std::optional<package::StatisticsReport> statistics;
  std::vector<package::Distribution> distributions;
  /// The full metadata graph the entry was read from.
  rdf::Dataset description;
  /// Catalog-relative path of the source file, slash-separated.
  std::string sourcePath;
};

struct TaskEntry {
  metadata::TaskMetadata metadata;
  rdf::Dataset description;
  std::string sourcePath;
};

struct ProfileEntry {
  metadata::ProfileMetadata metadata;
  rdf::Dataset description;
  std::string sourcePath;
};

struct ReportEntry {
  /// File-name-safe identifier, unique within the catalog.
  std::string id;
  nanopub::BenchmarkRunReport report;
  nanopub::Nanopublication nanopub;
  std::string sourcePath;
};

/// Something in the catalog that points nowhere, or a source file that was
/// skipped. Rendered pages still get generated.
struct Warning {
  std::string subject;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

/// Everything the site is generated from. Entries are sorted by id, reports
/// by date descending then IRI.
struct Catalog {
  std::vector<DatasetEntry> datasets;
  std::vector<TaskEntry> tasks;
  std::vector<ProfileEntry> profiles;
  std::vector<ReportEntry> reports;
  std::string version = "dev";
  std::vector<Warning> warnings;

  /// Restores the ordering invariants and assigns report ids. Throws
  /// ConflictError when two entries of one kind share an id.
  void normalize();

  const TaskEntry* find_task(const rdf::Iri& iri) const;
  const ProfileEntry* find_profile(const rdf::Iri& iri) const;
};

/// Reads a catalog tree:
///
///   datasets/<dir>/metadata.ttl
///   tasks/<dir>/metadata.ttl
///   profiles/<dir>/metadata.ttl
///   reports/*.trig
///
/// Any missing subdirectory counts as empty. Metadata errors are fatal
/// (SyntaxError, MissingFieldError, ...); a report that fails the
/// nanopublication rules is skipped with a Warning.
Catalog load_catalog(const std::filesystem::path& dir, const std::string& version = "dev",
                     const Vocabulary& vocab = Vocabulary::standard());

/// Last path segment of the report IRI with characters outside
/// [A-Za-z0-9._-] replaced by '-'; "report" when nothing is left.
std::string report_slug(const rdf::Iri& reportIri);

/// One merged default graph: every dataset, task and profile description
/// plus every report assertion. Blank nodes are scoped per source.
rdf::Dataset metadata_dump(const Catalog& catalog, const Vocabulary& vocab = Vocabulary::standard());

/// The statements about `iri` in `graph`: its concise bounded description
/// (outgoing statements, following blank-node objects), extended with the
/// descriptions of IRIs nested under it (`<iri>/...` or `<iri>#...`) that it
/// links to, such as distributions.
rdf::Dataset describe_resource(const rdf::Dataset& graph, const rdf::Iri& iri);

}  // namespace rbkit::sitegen
