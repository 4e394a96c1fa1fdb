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

#include "rbkit/sitegen/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/rdf/parser.hpp"

namespace fs = std::filesystem;

namespace rbkit::sitegen {

namespace {

template <typename Entry>
void sort_unique(std::vector<Entry>& entries, const char* kind) {
  std::ranges::sort(entries, {}, [](const Entry& e) { return e.metadata.id; });
  const auto dup = std::ranges::adjacent_find(
      entries, [](const Entry& a, const Entry& b) { return a.metadata.id == b.metadata.id; });
  if (dup != entries.end()) {
    throw ConflictError(std::string("two ") + kind + " entries share the id '" + dup->metadata.id + "'");
  }
}

rdf::Dataset parse_file(const fs::path& root, const std::string& rel, rdf::Format format) {
  try {
    return rdf::parse_document(io::read_file(root / rel), format);
  } catch (const SyntaxError& e) {
    throw e.in_file(rel);
  }
}

// Catalog-relative paths of <kind>/<dir>/metadata.ttl, by directory name.
std::vector<std::string> metadata_files(const fs::path& root, const std::string& kind) {
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(root / kind, ec)) return out;
  for (const auto& entry : fs::directory_iterator(root / kind)) {
    if (entry.is_directory() && fs::is_regular_file(entry.path() / "metadata.ttl")) {
      out.push_back(kind + "/" + entry.path().filename().generic_string() + "/metadata.ttl");
    }
  }
  std::ranges::sort(out);
  return out;
}

template <typename Fn>
auto with_source(const std::string& rel, Fn&& fn) {
  try {
    return fn();
  } catch (const SyntaxError&) {
    throw;
  } catch (const MissingFieldError& e) {
    throw MissingFieldError(rel + ": " + e.field());
  } catch (const TypeMismatchError& e) {
    const std::string_view what = e.what();
    throw TypeMismatchError(rel + ": " + e.field(), std::string(what.substr(e.field().size() + 2)));
  }
}

}  // namespace

void Catalog::normalize() {
  sort_unique(datasets, "dataset");
  sort_unique(tasks, "task");
  sort_unique(profiles, "profile");
  std::ranges::sort(reports, [](const ReportEntry& a, const ReportEntry& b) {
    if (a.report.date != b.report.date) return a.report.date > b.report.date;
    return a.report.reportIri < b.report.reportIri;
  });
  // "index" is the results index page itself.
  std::set<std::string> used{"index"};
  for (auto& r : reports) {
    const std::string slug = report_slug(r.report.reportIri);
    std::string id = slug;
    for (int n = 2; !used.insert(id).second; ++n) id = slug + "-" + std::to_string(n);
    r.id = std::move(id);
  }
}

const TaskEntry* Catalog::find_task(const rdf::Iri& iri) const {
  const auto it = std::ranges::find(tasks, iri, [](const TaskEntry& t) { return t.metadata.iri; });
  return it == tasks.end() ? nullptr : &*it;
}

const ProfileEntry* Catalog::find_profile(const rdf::Iri& iri) const {
  const auto it =
      std::ranges::find(profiles, iri, [](const ProfileEntry& p) { return p.metadata.iri; });
  return it == profiles.end() ? nullptr : &*it;
}

Catalog load_catalog(const fs::path& dir, const std::string& version, const Vocabulary& vocab) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("catalog directory not found: " + dir.string());
  Catalog catalog;
  catalog.version = version;

  for (const auto& rel : metadata_files(dir, "datasets")) {
    auto graph = parse_file(dir, rel, rdf::Format::Turtle);
    with_source(rel, [&] {
      const auto subject = metadata::single_typed_subject(graph, vocab.Dataset);
      catalog.datasets.push_back({
          .metadata = metadata::extract_dataset_metadata(graph, subject, vocab),
          .statistics = package::statistics_from_rdf(graph, subject, vocab),
          .distributions = package::distributions_from_rdf(graph, subject, vocab),
          .description = graph,
          .sourcePath = rel,
      });
      return 0;
    });
  }
  for (const auto& rel : metadata_files(dir, "tasks")) {
    auto graph = parse_file(dir, rel, rdf::Format::Turtle);
    with_source(rel, [&] {
      const auto subject = metadata::single_typed_subject(graph, vocab.Task);
      catalog.tasks.push_back({metadata::extract_task_metadata(graph, subject, vocab), graph, rel});
      return 0;
    });
  }
  for (const auto& rel : metadata_files(dir, "profiles")) {
    auto graph = parse_file(dir, rel, rdf::Format::Turtle);
    with_source(rel, [&] {
      const auto subject = metadata::single_typed_subject(graph, vocab.Profile);
      catalog.profiles.push_back({metadata::extract_profile_metadata(graph, subject, vocab), graph, rel});
      return 0;
    });
  }

  std::vector<std::string> reportFiles;
  if (fs::is_directory(dir / "reports", ec)) {
    for (const auto& entry : fs::directory_iterator(dir / "reports")) {
      if (entry.is_regular_file() && entry.path().extension() == ".trig") {
        reportFiles.push_back("reports/" + entry.path().filename().generic_string());
      }
    }
  }
  std::ranges::sort(reportFiles);
  std::set<rdf::Iri> seen;
  for (const auto& rel : reportFiles) {
    try {
      auto np = nanopub::parse_nanopub(parse_file(dir, rel, rdf::Format::TriG));
      auto report = nanopub::extract_report(np, vocab);
      if (!seen.insert(report.reportIri).second) {
        catalog.warnings.push_back({rel, "duplicate report " + report.reportIri.str() + " skipped"});
        continue;
      }
      catalog.reports.push_back({"", std::move(report), std::move(np), rel});
    } catch (const Error& e) {
      catalog.warnings.push_back({rel, std::string("report skipped: ") + e.what()});
    }
  }
  catalog.normalize();
  return catalog;
}

std::string report_slug(const rdf::Iri& reportIri) {
  std::string_view s = reportIri.view();
  while (!s.empty() && (s.back() == '/' || s.back() == '#')) s.remove_suffix(1);
  const auto cut = s.find_last_of("/#:");
  if (cut != std::string_view::npos) s.remove_prefix(cut + 1);
  std::string out;
  for (const char c : s) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '.' || c == '_' || c == '-';
    out += keep ? c : '-';
  }
  while (!out.empty() && out.front() == '.') out.erase(0, 1);
  return out.empty() ? "report" : out;
}

rdf::Dataset metadata_dump(const Catalog& catalog, const Vocabulary& vocab) {
  rdf::Dataset dump;
  metadata::add_standard_prefixes(dump, vocab);
  const auto add = [&](const rdf::Dataset& g, const std::string& scope) {
    dump.merge(rdf::scope_blank_nodes(g.with_graph(std::nullopt), scope));
  };
  for (std::size_t i = 0; i < catalog.datasets.size(); ++i) {
    add(catalog.datasets[i].description, "d" + std::to_string(i) + "_");
  }
  for (std::size_t i = 0; i < catalog.tasks.size(); ++i) {
    add(catalog.tasks[i].description, "t" + std::to_string(i) + "_");
  }
  for (std::size_t i = 0; i < catalog.profiles.size(); ++i) {
    add(catalog.profiles[i].description, "p" + std::to_string(i) + "_");
  }
  for (std::size_t i = 0; i < catalog.reports.size(); ++i) {
    add(catalog.reports[i].nanopub.assertion, "r" + std::to_string(i) + "_");
  }
  return dump;
}

rdf::Dataset describe_resource(const rdf::Dataset& graph, const rdf::Iri& iri) {
  std::map<rdf::Term, std::vector<const rdf::Quad*>> bySubject;
  for (const auto& q : graph) bySubject[q.subject].push_back(&q);

  const std::string slash = iri.str() + "/";
  const std::string hash = iri.str() + "#";
  const auto nested = [&](const rdf::Term& t) {
    return t.is_iri() && (t.value().starts_with(slash) || t.value().starts_with(hash));
  };

  rdf::Dataset out;
  for (const auto& [name, ns] : graph.prefixes()) out.set_prefix(name, ns);
  std::set<rdf::Term> visited;
  std::deque<rdf::Term> todo{rdf::Term::iri(iri)};
  while (!todo.empty()) {
    rdf::Term t = std::move(todo.front());
    todo.pop_front();
    if (!visited.insert(t).second) continue;
    const auto it = bySubject.find(t);
    if (it == bySubject.end()) continue;
    for (const rdf::Quad* q : it->second) {
      out.add(*q);
      if (q->object.is_blank() || nested(q->object)) todo.push_back(q->object);
    }
  }
  return out;
}

}  // namespace rbkit::sitegen
