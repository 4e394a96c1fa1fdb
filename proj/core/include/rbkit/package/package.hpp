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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbkit/metadata/types.hpp"
#include "rbkit/rdf/dataset.hpp"
#include "rbkit/rdf/format.hpp"
#include "rbkit/vocab.hpp"

namespace rbkit::package {

struct SourceElement {
  /// Path of the file inside the origin, slash-separated.
  std::string fileName;
  rdf::Dataset data;
};

struct SourceDataset {
  /// One element per RDF file, in lexicographic file order.
  std::vector<SourceElement> elements;
  std::filesystem::path origin;
};

/// Reads a directory or a .tar archive. Files with an RDF extension (.ttl,
/// .trig, .nt, .nq) become elements; anything else is ignored. Parsing runs
/// on up to `workers` threads (0 = hardware concurrency).
///
/// Throws SyntaxError naming the offending file, EmptySourceError when no RDF
/// file is found, and IoError when the origin cannot be read.
SourceDataset load_source(const std::filesystem::path& origin, std::size_t workers = 0);

/// Content checks against the declared metadata. Rule ids: named-graphs
/// (Error, element uses named graphs while the type is triples),
/// element-count-mismatch (Error), empty-element (Warning). Element paths are
/// 0-based: "element[2]" is the third file.
metadata::ValidationReport validate_contents(const SourceDataset& src,
                                             const metadata::DatasetMetadata& md);

struct StatisticsReport {
  std::uint64_t elementCount = 0;
  std::uint64_t totalStatements = 0;
  std::uint64_t distinctSubjects = 0;
  std::uint64_t distinctPredicates = 0;
  std::uint64_t distinctObjects = 0;
  bool usesNamedGraphs = false;

  friend bool operator==(const StatisticsReport&, const StatisticsReport&) = default;
};

/// Exact counts over the whole stream. Blank nodes of different elements are
/// distinct terms.
StatisticsReport compute_statistics(const SourceDataset& src);

enum class DistributionKind { Flat, Stream };

struct Distribution {
  DistributionKind kind = DistributionKind::Flat;
  rdf::Format format = rdf::Format::NQuads;
  /// Number of leading elements; empty for the full stream.
  std::optional<std::uint64_t> sizeCap;
  std::uint64_t byteSize = 0;
  std::string sha256;
  std::string fileName;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// `flat_<cap|full>.<ext>` or `stream_<cap|full>.<ext>.tar`.
std::string distribution_file_name(DistributionKind kind, std::optional<std::uint64_t> cap,
                                   rdf::Format format);

/// `<dataset>/files/<fileName>`.
std::string distribution_iri(const rdf::Iri& dataset, const std::string& fileName);

struct PackagedFile {
  Distribution distribution;
  std::string content;
};

/// Every (cap, format, kind) combination: caps in ladder order followed by
/// "full", then formats in the given order, flat before stream. Caps not
/// below the element count are skipped. Flat files concatenate the
/// element serializations with blank nodes relabeled `e<i>_b<n>`; stream
/// archives hold one file per element named by its zero-padded index.
///
/// Throws FormatCapabilityError when the source uses named graphs and a
/// triples-only format is requested.
std::vector<PackagedFile> build_distributions(const SourceDataset& src,
                                              const std::vector<std::uint64_t>& ladder,
                                              const std::vector<rdf::Format>& formats);

/// Statistics as properties of the dataset resource.
rdf::Dataset to_rdf(const StatisticsReport& stats, const rdf::Iri& dataset,
                    const Vocabulary& vocab = Vocabulary::standard());

/// Reads back what to_rdf(stats) wrote; nullopt when the graph carries no
/// statement count for `dataset`.
std::optional<StatisticsReport> statistics_from_rdf(const rdf::Dataset& graph, const rdf::Iri& dataset,
                                                    const Vocabulary& vocab = Vocabulary::standard());

/// Distribution descriptions linked from the dataset resource. Each
/// distribution is named `<dataset>/files/<fileName>`.
rdf::Dataset to_rdf(const std::vector<Distribution>& distributions, const rdf::Iri& dataset,
                    const Vocabulary& vocab = Vocabulary::standard());

/// Reads back what to_rdf(distributions) wrote, ordered by file name.
std::vector<Distribution> distributions_from_rdf(const rdf::Dataset& graph,
                                                 const rdf::Iri& dataset,
                                                 const Vocabulary& vocab = Vocabulary::standard());

struct PackageOptions {
  std::vector<std::uint64_t> ladder{10, 100, 1000};
  std::vector<rdf::Format> formats{rdf::Format::NQuads};
  metadata::ValidationPolicy policy;
  std::size_t workers = 0;
};

struct PackageResult {
  metadata::ValidationReport validation;
  StatisticsReport statistics;
  std::vector<Distribution> distributions;
  /// False when validation found errors; nothing is written then.
  bool written = false;
};

/// The whole dataset stage: load the source, extract and validate the
/// metadata (curator rules plus content checks), compute statistics, build
/// distributions and write
///
///   <outDir>/dist/<fileName>
///   <outDir>/stats.ttl
///   <outDir>/validation.ttl
///   <outDir>/metadata.ttl   (original metadata enriched with the above)
///
/// Output is staged and moved into place only on success.
PackageResult package_dataset(const std::filesystem::path& origin,
                              const std::filesystem::path& metadataFile,
                              const std::filesystem::path& outDir,
                              const PackageOptions& options = {},
                              const Vocabulary& vocab = Vocabulary::standard());

}  // namespace rbkit::package
