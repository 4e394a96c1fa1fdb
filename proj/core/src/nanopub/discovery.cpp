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

#include "rbkit/nanopub/discovery.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/parser.hpp"

namespace fs = std::filesystem;

namespace rbkit::nanopub {

namespace {

constexpr std::string_view kFileScheme = "file://";

std::string file_iri(const fs::path& p) {
  return std::string(kFileScheme) + fs::absolute(p).lexically_normal().generic_string();
}

}  // namespace

DirectoryIndexSource::DirectoryIndexSource(fs::path dir) : dir_(std::move(dir)) {}

std::vector<std::string> DirectoryIndexSource::list() {
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) throw SourceUnavailableError("not a directory: " + dir_.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".trig") files.push_back(entry.path());
  }
  if (ec) throw SourceUnavailableError("cannot list " + dir_.string() + ": " + ec.message());
  std::ranges::sort(files);
  std::vector<std::string> out;
  for (const auto& f : files) out.push_back(file_iri(f));
  return out;
}

FetchedDocument DirectoryIndexSource::fetch(const std::string& iri) {
  if (!iri.starts_with(kFileScheme)) throw SourceUnavailableError("not a file IRI: " + iri);
  const fs::path path(iri.substr(kFileScheme.size()));
  return {io::read_file(path), rdf::format_from_extension(path).value_or(rdf::Format::TriG)};
}

std::unique_ptr<ReportIndexSource> open_index_source(const std::string& location,
                                                     HttpOptions options) {
  if (location.starts_with("http://") || location.starts_with("https://")) {
    return std::make_unique<HttpIndexSource>(location, options);
  }
  std::string path = location;
  if (path.starts_with(kFileScheme)) path.erase(0, kFileScheme.size());
  return std::make_unique<DirectoryIndexSource>(path);
}

DiscoveryResult discover_reports(ReportIndexSource& source, const DiscoveryOptions& options) {
  std::vector<std::string> listed;
  try {
    listed = source.list();
  } catch (const SourceUnavailableError&) {
    throw;
  } catch (const std::exception& e) {
    throw SourceUnavailableError(std::string("report index unavailable: ") + e.what());
  }
  std::vector<std::string> iris;
  std::set<std::string> seen;
  for (auto& iri : listed) {
    if (seen.insert(iri).second) iris.push_back(std::move(iri));
  }

  const Vocabulary& vocab = options.vocab ? *options.vocab : Vocabulary::standard();
  std::vector<std::optional<DiscoveredReport>> found(iris.size());
  std::vector<std::optional<std::string>> errors(iris.size());
  detail::parallel_for(iris.size(), std::max<std::size_t>(1, options.parallelism), [&](std::size_t i) {
    try {
      const FetchedDocument doc = source.fetch(iris[i]);
      if (options.verify) options.verify(iris[i], doc);
      const auto base = iris[i].starts_with(kFileScheme) ? std::nullopt : std::optional(iris[i]);
      Nanopublication np = parse_nanopub(rdf::parse_document(doc.bytes, doc.format, base));
      BenchmarkRunReport report = extract_report(np, vocab);
      found[i] = DiscoveredReport{iris[i], std::move(report), std::move(np)};
    } catch (const StructureError& e) {
      errors[i] = "structure: " + std::string(e.what());
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  DiscoveryResult result;
  for (std::size_t i = 0; i < iris.size(); ++i) {
    if (found[i]) result.reports.push_back(std::move(*found[i]));
    if (errors[i]) result.diagnostics.push_back({iris[i], *errors[i]});
  }
  std::ranges::sort(result.reports, [](const DiscoveredReport& a, const DiscoveredReport& b) {
    if (a.report.date != b.report.date) return a.report.date > b.report.date;
    if (a.report.reportIri != b.report.reportIri) return a.report.reportIri < b.report.reportIri;
    return a.sourceIri < b.sourceIri;
  });
  std::ranges::sort(result.diagnostics, {}, &Diagnostic::iri);
  return result;
}

}  // namespace rbkit::nanopub
