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
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rbkit/nanopub/nanopub.hpp"
#include "rbkit/rdf/format.hpp"

namespace rbkit::nanopub {

struct FetchedDocument {
  std::string bytes;
  rdf::Format format = rdf::Format::TriG;
};

/// Where report nanopublications are found. list() returns the same IRIs
/// for the lifetime of one pipeline run. Both calls may throw; list()
/// failures abort discovery, fetch() failures become diagnostics.
/// Implementations must allow concurrent fetch() calls.
class ReportIndexSource {
 public:
  virtual ~ReportIndexSource() = default;
  virtual std::vector<std::string> list() = 0;
  virtual FetchedDocument fetch(const std::string& iri) = 0;
};

/// Every *.trig file of a directory (not recursive), listed as file:// IRIs
/// in file name order. Used for fixtures and offline mirrors.
class DirectoryIndexSource final : public ReportIndexSource {
 public:
  explicit DirectoryIndexSource(std::filesystem::path dir);
  std::vector<std::string> list() override;
  FetchedDocument fetch(const std::string& iri) override;

 private:
  std::filesystem::path dir_;
};

struct HttpOptions {
  std::chrono::milliseconds timeout{10000};
};

/// An index endpoint returning one IRI per line ('#' comments and blank
/// lines ignored; relative references resolve against the index URL).
/// Each IRI is fetched with `Accept: application/trig`.
class HttpIndexSource final : public ReportIndexSource {
 public:
  explicit HttpIndexSource(std::string indexUrl, HttpOptions options = {});
  std::vector<std::string> list() override;
  FetchedDocument fetch(const std::string& iri) override;

 private:
  std::string indexUrl_;
  HttpOptions options_;
};

/// An HTTP(S) source for http:// and https:// locations, a directory source
/// otherwise (a file:// prefix is stripped).
std::unique_ptr<ReportIndexSource> open_index_source(const std::string& location,
                                                     HttpOptions options = {});

struct DiscoveredReport {
  /// The IRI as listed by the source.
  std::string sourceIri;
  BenchmarkRunReport report;
  Nanopublication nanopub;
};

struct Diagnostic {
  std::string iri;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct DiscoveryOptions {
  std::size_t parallelism = 4;
  /// Called on each fetched document before parsing; throwing rejects it.
  /// The hook point for signature or trusty-URI checks.
  std::function<void(const std::string& iri, const FetchedDocument&)> verify;
  const Vocabulary* vocab = &Vocabulary::standard();
};

struct DiscoveryResult {
  /// Ordered by date descending, then report IRI ascending.
  std::vector<DiscoveredReport> reports;
  /// Ordered by listed IRI.
  std::vector<Diagnostic> diagnostics;
};

/// Fetches, parses, checks and extracts every listed report. Duplicate IRIs
/// in the listing are processed once. Per-item failures become diagnostics;
/// only a failing list() raises, as SourceUnavailableError.
DiscoveryResult discover_reports(ReportIndexSource& source, const DiscoveryOptions& options = {});

}  // namespace rbkit::nanopub
