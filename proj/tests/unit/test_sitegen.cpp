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

#include <doctest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/isomorphism.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/sitegen/site.hpp"

using namespace rbkit;
using namespace rbkit::sitegen;
namespace fs = std::filesystem;

namespace {

// Fixture catalog plus every nanopub of the mock index under reports/.
void make_catalog(const fs::path& dir) {
  fs::copy(testing::fixture("catalog"), dir, fs::copy_options::recursive);
  fs::create_directories(dir / "reports");
  for (const auto& e : fs::directory_iterator(testing::fixture("index"))) {
    fs::copy_file(e.path(), dir / "reports" / e.path().filename());
  }
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

const PageOptions kOptions{"https://github.com/example/registry"};

}  // namespace

TEST_SUITE("sitegen.catalog") {
  TEST_CASE("loads the fixture and skips broken reports") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat", "1.0");
    CHECK(c.version == "1.0");
    CHECK(c.tasks.size() == 9);
    CHECK(c.profiles.size() == 2);
    CHECK(c.datasets.size() == 1);
    CHECK(c.reports.size() == 8);
    CHECK(c.warnings.size() == 2);
    CHECK(c.tasks.front().metadata.id == "flat-parsing");
    CHECK(c.tasks.front().sourcePath == "tasks/flat-parsing/metadata.ttl");
    CHECK(c.reports.front().id == "r04");
    CHECK(c.find_task(rdf::Iri("https://w3id.org/rbkit/tasks/rdf-patch")) != nullptr);
    CHECK(c.find_profile(rdf::Iri("https://w3id.org/rbkit/profiles/none")) == nullptr);
  }

  TEST_CASE("bad metadata is fatal and names the file") {
    testing::TempDir tmp;
    io::write_file(tmp / "cat/tasks/broken/metadata.ttl", "@prefix rb: <https://w3id.org/rbkit/vocab/1.0#> .\n<x> a rb:Task .");
    try {
      load_catalog(tmp / "cat");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("tasks/broken/metadata.ttl") != std::string::npos);
    }
  }

  TEST_CASE("empty catalog") {
    testing::TempDir tmp;
    const auto c = load_catalog(tmp.path());
    CHECK(c.datasets.empty());
    const auto site = generate_site(c);
    CHECK(site.pages.size() == 2);
  }

  TEST_CASE("slugs") {
    CHECK(report_slug(rdf::Iri("https://w3id.org/np/RAabc123")) == "RAabc123");
    CHECK(report_slug(rdf::Iri("https://w3id.org/np/a b%/")) == "a-b-");
    CHECK(report_slug(rdf::Iri("https://example.org/")) == "example.org");
    CHECK(report_slug(rdf::Iri("urn:x:")) == "report");
  }

  TEST_CASE("normalize: duplicate ids conflict, report ids are unique") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    auto c = load_catalog(tmp / "cat");
    auto extra = c.reports.front();
    extra.report.reportIri = rdf::Iri("https://other.example/np/r04");
    c.reports.push_back(extra);
    auto index = c.reports.front();
    index.report.reportIri = rdf::Iri("https://other.example/np/index");
    c.reports.push_back(index);
    c.normalize();
    std::set<std::string> ids;
    for (const auto& r : c.reports) CHECK(ids.insert(r.id).second);
    CHECK(ids.contains("r04-2"));
    CHECK_FALSE(ids.contains("index"));
    c.tasks.push_back(c.tasks.front());
    CHECK_THROWS_AS(c.normalize(), ConflictError);
  }

  TEST_CASE("describe_resource follows blank nodes and nested IRIs") {
    const auto g = rdf::parse_document(R"(
      @prefix ex: <http://e/> .
      ex:d ex:p [ ex:q [ ex:r 1 ] ] ; ex:dist <http://e/d/files/a> ; ex:other ex:x .
      <http://e/d/files/a> ex:size 5 .
      ex:x ex:unrelated 1 .
      <http://e/dx> ex:also 1 .)", rdf::Format::Turtle);
    const auto d = describe_resource(g, rdf::Iri("http://e/d"));
    CHECK(d.size() == 6);
  }

  TEST_CASE("dump keeps sources apart") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat");
    const auto dump = metadata_dump(c);
    CHECK_FALSE(dump.has_named_graphs());
    std::set<std::string> prefixes;
    for (const auto& b : dump.blank_nodes()) prefixes.insert(b.value().substr(0, 1));
    CHECK(prefixes.size() >= 3);
    const auto reports = dump.subjects(rdf::Term::iri(rdf::rdfns::type), Vocabulary::standard().BenchmarkRunReport);
    CHECK(reports.size() == 8);
  }
}

TEST_SUITE("sitegen.pages") {
  TEST_CASE("edit links") {
    CHECK(render_edit_url("https://github.com/o/r", "datasets/foo/metadata.ttl") ==
          "https://github.com/o/r/edit/main/datasets/foo/metadata.ttl");
    CHECK(render_edit_url("https://github.com/o/r/", "a b/c%.ttl") == "https://github.com/o/r/edit/main/a%20b/c%25.ttl");
    CHECK_THROWS_AS(render_edit_url("https://github.com/o/r", ""), InvalidPathError);
    CHECK_THROWS_AS(render_edit_url("https://github.com/o/r", "/etc/passwd"), InvalidPathError);
    CHECK_THROWS_AS(render_edit_url("https://github.com/o/r", "a/../b"), InvalidPathError);
    CHECK_THROWS_AS(render_edit_url("https://github.com/o/r", "a\\b"), InvalidPathError);
  }

  TEST_CASE("relative links") {
    CHECK(relative_link("results/index.md", "tasks/x/index.md") == "../tasks/x/index.md");
    CHECK(relative_link("datasets/a/index.md", "datasets/b/index.md") == "../b/index.md");
    CHECK(relative_link("index.md", "results/r1.md") == "results/r1.md");
    CHECK(relative_link("results/index.md", "results/r1.md") == "r1.md");
  }

  TEST_CASE("results index has one group per task, newest first") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat");
    const auto idx = render_results_index(c, kOptions);
    const auto& body = idx.page.body;
    CHECK(count(body, "\n## ") == 9);
    CHECK(count(body, "_No reports yet._") == 4);
    CHECK(idx.warnings.empty());
    const auto group = body.substr(body.find("## [Stream compression]"));
    CHECK(group.find("r02") < group.find("r08"));
    CHECK(group.find("r08") < group.find("r01"));
    CHECK(idx.page.path == kResultsPagePath);
  }

  TEST_CASE("unknown tasks get their own group") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    fs::remove_all(tmp / "cat/tasks/flat-parsing");
    const auto idx = render_results_index(load_catalog(tmp / "cat"), kOptions);
    CHECK(count(idx.page.body, "\n## ") == 9);
    CHECK(idx.page.body.find("## Unknown task") != std::string::npos);
    CHECK(idx.warnings.size() == 2);
  }

  TEST_CASE("dataset page sections") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat");
    const auto page = render_dataset_page(c.datasets.front(), c, kOptions);
    CHECK(page.path == "datasets/sensor-small/index.md");
    CHECK(page.editUrl == "https://github.com/example/registry/edit/main/datasets/sensor-small/metadata.ttl");
    CHECK(page.body.find("## Creators") != std::string::npos);
    CHECK(page.body.find("## Use case") != std::string::npos);
    CHECK(page.body.find("## Downloads") == std::string::npos);
    CHECK(page.body.find("## Statistics") == std::string::npos);
    CHECK(page.document().starts_with("---\ntitle: \"Stream fixture sensor-small\"\nedit_url: "));
    CHECK(render_dataset_page(c.datasets.front(), c).document().find("edit_url") == std::string::npos);
  }

  TEST_CASE("report page") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat");
    const auto& entry = c.reports.front();
    const auto page = render_report_page(entry, c, kOptions);
    CHECK(page.path == "results/r04.md");
    CHECK(page.body.find("jena") != std::string::npos);
    CHECK(page.body.find("0000-0002-1825-0097") != std::string::npos);
    CHECK(page.body.find("../tasks/flat-parsing/index.md") != std::string::npos);
  }

  TEST_CASE("markdown special characters are escaped") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    auto c = load_catalog(tmp / "cat");
    c.datasets.front().metadata.title = "a|b *c* [d](e)";
    const auto page = render_dataset_page(c.datasets.front(), c);
    CHECK(page.body.find("a\\|b \\*c\\* \\[d\\](e)") != std::string::npos);
  }
}

TEST_SUITE("sitegen.site") {
  TEST_CASE("one page per resource, independent of worker count") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto c = load_catalog(tmp / "cat");
    const auto a = generate_site(c, kOptions, 1);
    const auto b = generate_site(c, kOptions, 8);
    CHECK(a.pages.size() == 2 + 1 + 9 + 2 + 8);
    REQUIRE(a.pages.size() == b.pages.size());
    for (std::size_t i = 0; i < a.pages.size(); ++i) CHECK(a.pages[i].document() == b.pages[i].document());
    CHECK(std::ranges::is_sorted(a.pages, {}, &Page::path));
    CHECK(a.dump == b.dump);
  }

  TEST_CASE("write_site is byte-reproducible") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    const auto site = generate_site(load_catalog(tmp / "cat"), kOptions);
    write_site(site, "1.0", tmp / "s1");
    write_site(site, "1.0", tmp / "s2");
    const auto files = io::list_files(tmp / "s1");
    CHECK(files == io::list_files(tmp / "s2"));
    for (const auto& f : files) CHECK(io::read_file(tmp / "s1" / f) == io::read_file(tmp / "s2" / f));

    const auto manifest = nlohmann::json::parse(io::read_file(tmp / "s1/snapshot.json"));
    CHECK(manifest["version"] == "1.0");
    CHECK(manifest["pages"].size() == site.pages.size());
    const auto nq = rdf::parse_document(io::read_file(tmp / "s1/dumps/catalog.nq"), rdf::Format::NQuads);
    const auto ttl = rdf::parse_document(io::read_file(tmp / "s1/dumps/catalog.ttl"), rdf::Format::Turtle);
    CHECK(rdf::dataset_isomorphic(nq, ttl));
    CHECK(rdf::dataset_isomorphic(nq, site.dump));
    CHECK(io::read_file(tmp / "s1/redirects.conf") == default_redirects());
  }

  TEST_CASE("dangling profile references are warnings") {
    testing::TempDir tmp;
    make_catalog(tmp / "cat");
    fs::remove_all(tmp / "cat/profiles/stream-mixed");
    const auto site = generate_site(load_catalog(tmp / "cat"));
    CHECK(std::ranges::any_of(site.warnings, [](const Warning& w) {
      return w.message.find("stream-mixed") != std::string::npos;
    }));
  }
}
