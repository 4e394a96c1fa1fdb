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

#include "rbkit/sitegen/site.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"
#include "parallel.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/serializer.hpp"

namespace rbkit::sitegen {

Site generate_site(const Catalog& catalog, const PageOptions& options, std::size_t workers) {
  std::vector<std::function<Page()>> jobs;
  jobs.emplace_back([&] { return render_home_page(catalog, options); });
  for (const auto& d : catalog.datasets) jobs.emplace_back([&] { return render_dataset_page(d, catalog, options); });
  for (const auto& t : catalog.tasks) jobs.emplace_back([&] { return render_task_page(t, catalog, options); });
  for (const auto& p : catalog.profiles) jobs.emplace_back([&] { return render_profile_page(p, catalog, options); });
  for (const auto& r : catalog.reports) jobs.emplace_back([&] { return render_report_page(r, catalog, options); });

  Site site;
  site.pages.resize(jobs.size());
  detail::parallel_for(jobs.size(), workers, [&](std::size_t i) { site.pages[i] = jobs[i](); });

  auto results = render_results_index(catalog, options);
  site.pages.push_back(std::move(results.page));
  std::ranges::sort(site.pages, {}, &Page::path);

  site.warnings = catalog.warnings;
  site.warnings.insert(site.warnings.end(), results.warnings.begin(), results.warnings.end());
  for (const auto& r : catalog.reports) {
    if (!catalog.find_profile(r.report.profile)) {
      site.warnings.push_back({r.report.reportIri.str(), "unknown profile " + r.report.profile.str()});
    }
  }
  for (const auto& t : catalog.tasks) {
    for (const auto& p : t.metadata.requiredProfiles) {
      if (!catalog.find_profile(p)) site.warnings.push_back({t.metadata.iri.str(), "unknown profile " + p.str()});
    }
  }

  site.dump = metadata_dump(catalog);
  site.redirects = default_redirects();
  return site;
}

std::string default_redirects() {
  return R"(# pattern -> target
# {name} matches one path segment. In {version}, "dev" stands for the
# published version; other versions are not served by this snapshot.

/ -> /site/index.md
/v/{version} -> /site/index.md

/datasets/{id} -> /site/datasets/{id}/index.md
/datasets/{id}/{version} -> /site/datasets/{id}/index.md
/v/{version}/datasets/{id} -> /site/datasets/{id}/index.md

/tasks/{id} -> /site/tasks/{id}/index.md
/tasks/{id}/{version} -> /site/tasks/{id}/index.md
/v/{version}/tasks/{id} -> /site/tasks/{id}/index.md

/profiles/{id} -> /site/profiles/{id}/index.md
/profiles/{id}/{version} -> /site/profiles/{id}/index.md
/v/{version}/profiles/{id} -> /site/profiles/{id}/index.md

/results -> /site/results/index.md
/results/{report} -> /site/results/{report}.md
/v/{version}/results -> /site/results/index.md
/v/{version}/results/{report} -> /site/results/{report}.md
)";
}

void write_site(const Site& site, const std::string& version, const std::filesystem::path& outDir) {
  io::StagedDirectory stage(outDir);
  nlohmann::json pages = nlohmann::json::array();
  for (const auto& p : site.pages) {
    io::write_file(stage.path() / "site" / p.path, p.document());
    pages.push_back({{"path", p.path}, {"kind", to_string(p.kind)}, {"id", p.id}, {"iri", p.iri}});
  }
  io::write_file(stage.path() / "dumps" / "catalog.nq", rdf::serialize_document(site.dump, rdf::Format::NQuads));
  io::write_file(stage.path() / "dumps" / "catalog.ttl", rdf::serialize_document(site.dump, rdf::Format::Turtle));
  io::write_file(stage.path() / "redirects.conf", site.redirects);
  const nlohmann::json manifest{{"version", version}, {"pages", pages}};
  io::write_file(stage.path() / "snapshot.json", manifest.dump(2) + "\n");
  stage.commit();
}

}  // namespace rbkit::sitegen
