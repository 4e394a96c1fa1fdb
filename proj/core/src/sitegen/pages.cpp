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

#include "rbkit/sitegen/pages.hpp"

#include <algorithm>

#include "markdown.hpp"
#include "rbkit/error.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/orcid.hpp"

namespace rbkit::sitegen {

namespace {

std::string format_label(rdf::Format f) {
  switch (f) {
    case rdf::Format::Turtle: return "Turtle";
    case rdf::Format::TriG: return "TriG";
    case rdf::Format::NTriples: return "N-Triples";
    case rdf::Format::NQuads: return "N-Quads";
  }
  return {};
}

std::string iri_link(const std::string& iri) { return md::link(iri, iri); }

std::string bullet_list(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& i : items) out += "- " + i + "\n";
  return out;
}

std::string section(const std::string& heading, const std::string& content) {
  return "\n## " + md::text(heading) + "\n\n" + content;
}

std::string systems_summary(const nanopub::BenchmarkRunReport& r) {
  std::string out;
  for (const auto& s : r.systems) {
    if (!out.empty()) out += ", ";
    out += s.name + " " + s.version;
  }
  return out;
}

std::string profile_ref(const std::string& from, const rdf::Iri& iri, const Catalog& catalog) {
  if (const auto* p = catalog.find_profile(iri)) {
    return md::link(p->metadata.name, relative_link(from, profile_page_path(p->metadata.id)));
  }
  return iri_link(iri.str()) + " (not in the catalog)";
}

std::string task_ref(const std::string& from, const rdf::Iri& iri, const Catalog& catalog) {
  if (const auto* t = catalog.find_task(iri)) {
    return md::link(t->metadata.name, relative_link(from, task_page_path(t->metadata.id)));
  }
  return iri_link(iri.str()) + " (not in the catalog)";
}

std::vector<std::vector<std::string>> report_rows(const std::string& from,
                                                  const std::vector<const ReportEntry*>& reports,
                                                  const Catalog& catalog) {
  std::vector<std::vector<std::string>> rows;
  for (const auto* r : reports) {
    rows.push_back({nanopub::format_date(r->report.date),
                    md::link(r->id, relative_link(from, report_page_path(r->id))),
                    profile_ref(from, r->report.profile, catalog) + " " + md::text(r->report.profileVersion),
                    md::text(systems_summary(r->report))});
  }
  return rows;
}

std::optional<std::string> edit_url(const PageOptions& options, const std::string& sourcePath) {
  if (options.sourceRepoBase.empty() || sourcePath.empty()) return std::nullopt;
  return render_edit_url(options.sourceRepoBase, sourcePath);
}

bool unreserved(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '.' || c == '_' || c == '~';
}

}  // namespace

std::string_view to_string(PageKind kind) noexcept {
  switch (kind) {
    case PageKind::Home: return "home";
    case PageKind::Dataset: return "dataset";
    case PageKind::Task: return "task";
    case PageKind::Profile: return "profile";
    case PageKind::ResultsIndex: return "results";
    case PageKind::Report: return "report";
  }
  return {};
}

std::string Page::document() const {
  std::string out = "---\ntitle: " + md::yaml_string(title) + "\n";
  if (editUrl) out += "edit_url: " + md::yaml_string(*editUrl) + "\n";
  out += "---\n\n";
  return out + body;
}

std::string render_edit_url(const std::string& sourceRepoBase, const std::string& sourcePath) {
  if (sourcePath.empty()) throw InvalidPathError("empty source path");
  if (sourcePath.front() == '/' || sourcePath.find('\\') != std::string::npos) {
    throw InvalidPathError("source path must be repository-relative: " + sourcePath);
  }
  std::string encoded;
  std::size_t start = 0;
  while (start <= sourcePath.size()) {
    auto end = sourcePath.find('/', start);
    if (end == std::string::npos) end = sourcePath.size();
    const std::string_view segment(sourcePath.data() + start, end - start);
    if (segment.empty() || segment == "." || segment == "..") {
      throw InvalidPathError("bad segment in source path: " + sourcePath);
    }
    if (!encoded.empty()) encoded += '/';
    for (const unsigned char c : segment) {
      if (unreserved(c)) {
        encoded += static_cast<char>(c);
      } else {
        static constexpr char kHex[] = "0123456789ABCDEF";
        encoded += '%';
        encoded += kHex[c >> 4];
        encoded += kHex[c & 15];
      }
    }
    start = end + 1;
  }
  std::string base = sourceRepoBase;
  while (base.ends_with('/')) base.pop_back();
  return base + "/edit/main/" + encoded;
}

std::string dataset_page_path(const std::string& id) { return "datasets/" + id + "/index.md"; }
std::string task_page_path(const std::string& id) { return "tasks/" + id + "/index.md"; }
std::string profile_page_path(const std::string& id) { return "profiles/" + id + "/index.md"; }
std::string report_page_path(const std::string& id) { return "results/" + id + ".md"; }

std::string relative_link(const std::string& from, const std::string& to) {
  const auto split = [](const std::string& p) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.size(); ++i) {
      if (i == p.size() || p[i] == '/') {
        parts.push_back(p.substr(start, i - start));
        start = i + 1;
      }
    }
    return parts;
  };
  auto a = split(from);
  const auto b = split(to);
  a.pop_back();  // directory of `from`
  std::size_t common = 0;
  while (common < a.size() && common + 1 < b.size() && a[common] == b[common]) ++common;
  std::string out;
  for (std::size_t i = common; i < a.size(); ++i) out += "../";
  for (std::size_t i = common; i < b.size(); ++i) {
    out += b[i];
    if (i + 1 < b.size()) out += '/';
  }
  return out;
}

Page render_home_page(const Catalog& catalog, const PageOptions&) {
  const std::string from(kHomePagePath);
  Page page{.path = from, .kind = PageKind::Home, .id = {}, .iri = {},
            .title = "Benchmark registry", .body = {}, .editUrl = std::nullopt};
  std::string& b = page.body;
  b += "# Benchmark registry\n\nVersion: " + md::text(catalog.version) + "\n";

  std::vector<std::string> items;
  for (const auto& d : catalog.datasets) {
    items.push_back(md::link(d.metadata.title, relative_link(from, dataset_page_path(d.metadata.id))));
  }
  b += section("Datasets", items.empty() ? "_None yet._\n" : bullet_list(items));
  items.clear();
  for (const auto& t : catalog.tasks) {
    items.push_back(md::link(t.metadata.name, relative_link(from, task_page_path(t.metadata.id))));
  }
  b += section("Tasks", items.empty() ? "_None yet._\n" : bullet_list(items));
  items.clear();
  for (const auto& p : catalog.profiles) {
    items.push_back(md::link(p.metadata.name, relative_link(from, profile_page_path(p.metadata.id))));
  }
  b += section("Profiles", items.empty() ? "_None yet._\n" : bullet_list(items));
  b += section("Results", md::link("Benchmark results", relative_link(from, std::string(kResultsPagePath))) +
                              " (" + std::to_string(catalog.reports.size()) + " reports)\n");
  return page;
}

Page render_dataset_page(const DatasetEntry& entry, const Catalog& catalog, const PageOptions& options) {
  const auto& m = entry.metadata;
  const std::string from = dataset_page_path(m.id);
  Page page{.path = from, .kind = PageKind::Dataset, .id = m.id, .iri = m.iri.str(),
            .title = m.title, .body = {}, .editUrl = edit_url(options, entry.sourcePath)};
  std::string& b = page.body;
  b += "# " + md::text(m.title) + "\n\n" + md::text(m.description) + "\n\n";

  std::vector<std::vector<std::string>> facts{
      {"Identifier", md::code(m.id)},
      {"IRI", iri_link(m.iri.str())},
      {"License", iri_link(m.license.str())},
      {"Stream element type", std::string(metadata::to_string(m.streamElementType))},
      {"Stream elements", std::to_string(m.declaredElementCount)},
  };
  if (m.sourceUrl) facts.push_back({"Source", iri_link(m.sourceUrl->str())});
  b += md::table({"Property", "Value"}, facts);

  if (!m.useCase.empty()) b += section("Use case", md::text(m.useCase) + "\n");
  if (!m.creators.empty()) {
    std::vector<std::string> items;
    for (const auto& a : m.creators) {
      std::string item = md::text(a.name.empty() ? "(unnamed)" : a.name);
      if (a.orcid) item += " (" + md::link("ORCID " + *a.orcid, std::string(Orcid::kIriPrefix) + *a.orcid) + ")";
      items.push_back(std::move(item));
    }
    b += section("Creators", bullet_list(items));
  }
  if (entry.statistics) {
    const auto& s = *entry.statistics;
    b += section("Statistics",
                 md::table({"Statistic", "Value"},
                           {{"Stream elements", std::to_string(s.elementCount)},
                            {"Statements", std::to_string(s.totalStatements)},
                            {"Distinct subjects", std::to_string(s.distinctSubjects)},
                            {"Distinct predicates", std::to_string(s.distinctPredicates)},
                            {"Distinct objects", std::to_string(s.distinctObjects)},
                            {"Uses named graphs", s.usesNamedGraphs ? "yes" : "no"}}));
  }
  if (!entry.distributions.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : entry.distributions) {
      rows.push_back({md::link(d.fileName, package::distribution_iri(m.iri, d.fileName)),
                      d.kind == package::DistributionKind::Flat ? "flat" : "stream",
                      format_label(d.format),
                      d.sizeCap ? std::to_string(*d.sizeCap) : "all",
                      std::to_string(d.byteSize), md::code(d.sha256)});
    }
    b += section("Downloads",
                 md::table({"File", "Kind", "Format", "Elements", "Size (bytes)", "SHA-256"}, rows));
  }
  std::vector<std::string> profiles;
  for (const auto& p : catalog.profiles) {
    if (metadata::profile_accepts(p.metadata, m)) {
      profiles.push_back(md::link(p.metadata.name, relative_link(from, profile_page_path(p.metadata.id))));
    }
  }
  if (!profiles.empty()) b += section("Profiles", bullet_list(profiles));
  return page;
}

Page render_task_page(const TaskEntry& entry, const Catalog& catalog, const PageOptions& options) {
  const auto& m = entry.metadata;
  const std::string from = task_page_path(m.id);
  Page page{.path = from, .kind = PageKind::Task, .id = m.id, .iri = m.iri.str(),
            .title = m.name, .body = {}, .editUrl = edit_url(options, entry.sourcePath)};
  std::string& b = page.body;
  b += "# " + md::text(m.name) + "\n\n" + md::text(m.description) + "\n\n";
  b += md::table({"Property", "Value"}, {{"Identifier", md::code(m.id)}, {"IRI", iri_link(m.iri.str())}});

  std::vector<std::vector<std::string>> metrics;
  for (const auto& x : m.metrics) {
    metrics.push_back({md::text(x.name), md::text(x.unit),
                       x.direction == metadata::Direction::HigherBetter ? "higher is better"
                                                                        : "lower is better"});
  }
  b += section("Metrics", md::table({"Metric", "Unit", "Direction"}, metrics));

  if (!m.requiredProfiles.empty()) {
    std::vector<std::string> items;
    for (const auto& p : m.requiredProfiles) items.push_back(profile_ref(from, p, catalog));
    b += section("Profiles", bullet_list(items));
  }

  std::vector<const ReportEntry*> reports;
  for (const auto& r : catalog.reports) {
    if (r.report.task == m.iri) reports.push_back(&r);
  }
  b += section("Results", reports.empty()
                              ? "_No reports yet._\n"
                              : md::table({"Date", "Report", "Profile", "Systems"},
                                          report_rows(from, reports, catalog)));
  return page;
}

Page render_profile_page(const ProfileEntry& entry, const Catalog& catalog, const PageOptions& options) {
  const auto& m = entry.metadata;
  const std::string from = profile_page_path(m.id);
  Page page{.path = from, .kind = PageKind::Profile, .id = m.id, .iri = m.iri.str(),
            .title = m.name, .body = {}, .editUrl = edit_url(options, entry.sourcePath)};
  std::string& b = page.body;
  b += "# " + md::text(m.name) + "\n\n";
  b += md::table({"Property", "Value"}, {{"Identifier", md::code(m.id)}, {"IRI", iri_link(m.iri.str())}});

  std::vector<std::string> constraints;
  for (const auto& c : m.constraints) {
    switch (c.kind) {
      case metadata::ConstraintKind::ElementTypeIs:
        constraints.push_back("stream element type is " +
                              std::string(metadata::to_string(std::get<metadata::StreamElementType>(c.value))));
        break;
      case metadata::ConstraintKind::MinElementCount:
        constraints.push_back("at least " + std::to_string(std::get<std::uint64_t>(c.value)) + " stream elements");
        break;
      case metadata::ConstraintKind::MaxElementCount:
        constraints.push_back("at most " + std::to_string(std::get<std::uint64_t>(c.value)) + " stream elements");
        break;
    }
  }
  b += section("Constraints", constraints.empty() ? "Every dataset qualifies.\n" : bullet_list(constraints));

  std::vector<std::string> members;
  for (const auto& d : catalog.datasets) {
    if (metadata::profile_accepts(m, d.metadata)) {
      members.push_back(md::link(d.metadata.title, relative_link(from, dataset_page_path(d.metadata.id))));
    }
  }
  b += section("Datasets", members.empty() ? "_No datasets match this profile._\n" : bullet_list(members));

  std::vector<std::string> tasks;
  for (const auto& t : catalog.tasks) {
    if (std::ranges::find(t.metadata.requiredProfiles, m.iri) != t.metadata.requiredProfiles.end()) {
      tasks.push_back(md::link(t.metadata.name, relative_link(from, task_page_path(t.metadata.id))));
    }
  }
  if (!tasks.empty()) b += section("Tasks", bullet_list(tasks));
  return page;
}

Page render_report_page(const ReportEntry& entry, const Catalog& catalog, const PageOptions& options) {
  const auto& r = entry.report;
  const std::string from = report_page_path(entry.id);
  Page page{.path = from, .kind = PageKind::Report, .id = entry.id, .iri = r.reportIri.str(),
            .title = "Benchmark run " + entry.id, .body = {},
            .editUrl = edit_url(options, entry.sourcePath)};
  std::string& b = page.body;
  b += "# Benchmark run " + md::text(entry.id) + "\n\n";
  std::vector<std::vector<std::string>> facts{
      {"Nanopublication", iri_link(r.reportIri.str())},
      {"Task", task_ref(from, r.task, catalog)},
      {"Profile", profile_ref(from, r.profile, catalog)},
      {"Profile version", md::text(r.profileVersion)},
      {"Benchmark code", iri_link(r.benchmarkCode.str())},
      {"Author", md::link("ORCID " + r.authorOrcid, std::string(Orcid::kIriPrefix) + r.authorOrcid)},
      {"Date", nanopub::format_date(r.date)},
  };
  if (r.resultsLink) facts.push_back({"Results", iri_link(r.resultsLink->str())});
  b += md::table({"Property", "Value"}, facts);

  std::vector<std::vector<std::string>> systems;
  for (const auto& s : r.systems) systems.push_back({md::text(s.name), md::text(s.version)});
  b += section("Evaluated systems", md::table({"System", "Version"}, systems));
  b += "\n" + md::link("All results", relative_link(from, std::string(kResultsPagePath))) + "\n";
  return page;
}

ResultsIndex render_results_index(const Catalog& catalog, const PageOptions&) {
  const std::string from(kResultsPagePath);
  ResultsIndex out{Page{.path = from, .kind = PageKind::ResultsIndex, .id = {}, .iri = {},
                        .title = "Benchmark results", .body = {}, .editUrl = std::nullopt},
                   {}};
  std::string& b = out.page.body;
  b += "# Benchmark results\n\n" + std::to_string(catalog.reports.size()) + " reports across " +
       std::to_string(catalog.tasks.size()) + " tasks.\n";

  const std::vector<std::string> header{"Date", "Report", "Profile", "Systems"};
  // catalog.reports is already in date-descending order.
  for (const auto& t : catalog.tasks) {
    std::vector<const ReportEntry*> group;
    for (const auto& r : catalog.reports) {
      if (r.report.task == t.metadata.iri) group.push_back(&r);
    }
    b += "\n## " + md::link(t.metadata.name, relative_link(from, task_page_path(t.metadata.id))) + "\n\n";
    b += group.empty() ? "_No reports yet._\n" : md::table(header, report_rows(from, group, catalog));
  }

  std::vector<const ReportEntry*> unknown;
  for (const auto& r : catalog.reports) {
    if (!catalog.find_task(r.report.task)) {
      unknown.push_back(&r);
      out.warnings.push_back({r.report.reportIri.str(), "unknown task " + r.report.task.str()});
    }
  }
  if (!unknown.empty()) {
    b += section("Unknown task", md::table(header, report_rows(from, unknown, catalog)));
  }
  return out;
}

}  // namespace rbkit::sitegen
