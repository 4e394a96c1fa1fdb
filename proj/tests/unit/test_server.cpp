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
#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "fixtures.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/isomorphism.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/server/http.hpp"
#include "rbkit/server/negotiation.hpp"
#include "rbkit/server/redirects.hpp"
#include "rbkit/server/snapshot.hpp"
#include "rbkit/sitegen/site.hpp"

using namespace rbkit;
using namespace rbkit::server;
namespace fs = std::filesystem;

namespace {

// A snapshot generated from the fixture catalog, version 1.0.
struct SnapshotFixture {
  testing::TempDir tmp;
  std::shared_ptr<const Snapshot> snapshot;

  SnapshotFixture() {
    fs::copy(testing::fixture("catalog"), tmp / "cat", fs::copy_options::recursive);
    fs::create_directories(tmp / "cat/reports");
    for (const char* r : {"r01", "r02", "r04"}) {
      fs::copy_file(testing::fixture(std::string("index/") + r + ".trig"), tmp / "cat/reports" / (std::string(r) + ".trig"));
    }
    const auto site = sitegen::generate_site(sitegen::load_catalog(tmp / "cat", "1.0"));
    sitegen::write_site(site, "1.0", tmp / "snap");
    snapshot = Snapshot::load(tmp / "snap");
  }
};

using Rules = std::vector<RedirectRule>;

const std::vector<std::string> kOffers = {"text/html", "text/turtle", "application/n-triples"};

}  // namespace

TEST_SUITE("server.redirects") {
  TEST_CASE("default table") {
    const auto table = RedirectTable::parse(sitegen::default_redirects());
    CHECK(table.resolve("/", "1.0") == "/site/index.md");
    CHECK(table.resolve("/datasets/foo", "1.0") == "/site/datasets/foo/index.md");
    CHECK(table.resolve("/datasets/foo/", "1.0") == "/site/datasets/foo/index.md");
    CHECK(table.resolve("/datasets/foo/dev", "1.0") == "/site/datasets/foo/index.md");
    CHECK(table.resolve("/datasets/foo/1.0", "1.0") == "/site/datasets/foo/index.md");
    CHECK(table.resolve("/v/dev/tasks/t", "1.0") == "/site/tasks/t/index.md");
    CHECK(table.resolve("/results/r01", "1.0") == "/site/results/r01.md");
    CHECK_FALSE(table.try_resolve("/datasets/foo/0.9", "1.0").has_value());
    CHECK_THROWS_AS(table.resolve("/nothing/here/at/all", "1.0"), NotFoundError);
    CHECK_FALSE(table.try_resolve("/datasets/..", "1.0").has_value());
    CHECK_FALSE(table.try_resolve("/datasets/.", "1.0").has_value());
    CHECK_FALSE(table.try_resolve("/datasets/{id}", "1.0").has_value());
    CHECK_FALSE(table.try_resolve("/datasets//x", "1.0").has_value());
  }

  TEST_CASE("construction rejects ambiguity and bad placeholders") {
    CHECK_THROWS_AS(RedirectTable(Rules{{"/a/{x}", "/t"}, {"/{y}/b", "/u"}}), SnapshotFormatError);
    CHECK_THROWS_AS(RedirectTable(Rules{{"/a/{x}", "/t/{y}"}}), SnapshotFormatError);
    CHECK_THROWS_AS(RedirectTable(Rules{{"a/b", "/t"}}), SnapshotFormatError);
    CHECK_THROWS_AS(RedirectTable(Rules{{"/a/{x}/{x}", "/t"}}), SnapshotFormatError);
    CHECK_NOTHROW(RedirectTable(Rules{{"/a/{x}", "/t/{x}"}, {"/b/{x}", "/u"}, {"/a/{x}/c", "/v"}}));
    try {
      RedirectTable::parse("# c\n/a -> /b\nbroken line\n");
      FAIL("expected an error");
    } catch (const SnapshotFormatError& e) {
      CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
  }

  TEST_CASE("path splitting") {
    CHECK(split_path("/") == std::vector<std::string>{});
    CHECK(split_path("/a/b/") == std::vector<std::string>{"a", "b"});
    CHECK(split_path("/a//b") == std::vector<std::string>{"a", "", "b"});
  }
}

TEST_SUITE("server.negotiation") {
  TEST_CASE("Accept parsing") {
    const auto ranges = parse_accept("text/turtle;q=0.5, TEXT/HTML, */*;q=0.1, bogus, a/b;q=2, c/d;q=0.3x");
    REQUIRE(ranges.size() == 3);
    CHECK(ranges[0].q == doctest::Approx(0.5));
    CHECK(ranges[1].type == "text");
    CHECK(ranges[1].subtype == "html");
    CHECK(ranges[2].specificity() == 0);
  }

  TEST_CASE("choice") {
    CHECK(choose_media_type(std::nullopt, kOffers) == "text/html");
    CHECK(choose_media_type("", kOffers) == "text/html");
    CHECK(choose_media_type("text/turtle", kOffers) == "text/turtle");
    CHECK(choose_media_type("text/turtle;q=0.4, application/n-triples;q=0.8", kOffers) == "application/n-triples");
    CHECK(choose_media_type("*/*", kOffers) == "text/html");
    CHECK(choose_media_type("text/*;q=0.5, text/turtle", kOffers) == "text/turtle");
    CHECK(choose_media_type("text/*, text/html;q=0", kOffers) == "text/turtle");
    CHECK(choose_media_type("*/*;q=0.1, application/*", kOffers) == "application/n-triples");
    CHECK(choose_media_type("image/png", kOffers) == std::nullopt);
    CHECK(choose_media_type("text/html;q=0", kOffers) == std::nullopt);
    CHECK(choose_media_type("text/turtle;charset=utf-8", kOffers) == "text/turtle");
  }
}

TEST_SUITE("server.snapshot") {
  TEST_CASE("load and resources") {
    SnapshotFixture f;
    CHECK(f.snapshot->version() == "1.0");
    const auto* ds = f.snapshot->find("datasets/sensor-small/index.md");
    REQUIRE(ds != nullptr);
    CHECK(ds->kind == sitegen::PageKind::Dataset);
    CHECK_FALSE(ds->graph.empty());
    const auto* home = f.snapshot->find("index.md");
    REQUIRE(home != nullptr);
    CHECK(home->graph.size() == f.snapshot->dump().size());
    CHECK(f.snapshot->find("nope.md") == nullptr);
  }

  TEST_CASE("missing pieces are format errors") {
    SnapshotFixture f;
    fs::remove(f.tmp / "snap/redirects.conf");
    CHECK_THROWS_AS(Snapshot::load(f.tmp / "snap"), SnapshotFormatError);
    CHECK_THROWS_AS(Snapshot::load(f.tmp / "elsewhere"), SnapshotFormatError);
  }

  TEST_CASE("request pipeline") {
    SnapshotFixture f;
    const auto& s = *f.snapshot;
    auto r = handle_request(s, "GET", "/datasets/sensor-small", "text/html");
    CHECK(r.status == 303);
    CHECK(r.headers.at("Location") == "/site/datasets/sensor-small/index.md");
    CHECK(r.headers.at("Vary") == "Accept");

    r = handle_request(s, "GET", "/tasks/flat-parsing?x=1", "application/n-quads");
    CHECK(r.status == 200);
    CHECK(r.contentType.starts_with("application/n-quads"));
    CHECK(rdf::dataset_isomorphic(rdf::parse_document(r.body, rdf::Format::NQuads),
                                  s.find("tasks/flat-parsing/index.md")->graph));

    r = handle_request(s, "HEAD", "/tasks/flat-parsing", "text/turtle");
    CHECK(r.status == 200);
    CHECK(r.body.empty());

    CHECK(handle_request(s, "GET", "/datasets/unknown", "text/turtle").status == 404);
    CHECK(handle_request(s, "GET", "/datasets/sensor-small/0.1", "text/turtle").status == 404);
    CHECK(handle_request(s, "POST", "/", std::nullopt).status == 405);
    CHECK(handle_request(s, "GET", "/", "image/png").status == 406);

    r = handle_request(s, "GET", "/site/index.md", std::nullopt);
    CHECK(r.status == 200);
    CHECK(r.body == io::read_file(f.tmp / "snap/site/index.md"));
    CHECK(handle_request(s, "GET", "/dumps/catalog.nq", std::nullopt).status == 200);
    CHECK(handle_request(s, "GET", "/site/../snapshot.json", std::nullopt).status == 404);
    CHECK(handle_request(s, "GET", "/site/%2e%2e/snapshot.json", std::nullopt).status == 404);
    CHECK(handle_request(s, "GET", "/site/", std::nullopt).status == 404);
  }

  TEST_CASE("holder swaps atomically") {
    SnapshotFixture f;
    SnapshotHolder holder(f.snapshot);
    const auto before = holder.get();
    holder.replace(Snapshot::load(f.tmp / "snap"));
    CHECK(holder.get() != before);
    CHECK(before->version() == "1.0");
  }
}

TEST_SUITE("server.http") {
  TEST_CASE("bind addresses") {
    CHECK(BindAddress::parse("0.0.0.0:9000").port == 9000);
    CHECK(BindAddress::parse("[::1]:80").host == "::1");
    CHECK_THROWS_AS(BindAddress::parse("localhost"), ConfigError);
    CHECK_THROWS_AS(BindAddress::parse("h:99999"), ConfigError);
    CHECK_THROWS_AS(BindAddress::parse("h:x"), ConfigError);
    ::setenv("RBKIT_BIND", "127.0.0.2:1234", 1);
    CHECK(BindAddress::from_environment().port == 1234);
    ::unsetenv("RBKIT_BIND");
    CHECK(BindAddress::from_environment().port == 8080);
  }

  TEST_CASE("live server") {
    SnapshotFixture f;
    SnapshotHolder holder(f.snapshot);
    HttpServer server(holder);
    const int port = server.bind("127.0.0.1", 0);
    std::thread t([&] { server.listen(); });
    httplib::Client client("127.0.0.1", port);
    client.set_connection_timeout(2);
    for (int i = 0; i < 50 && !client.Get("/site/index.md"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(20));

    auto res = client.Get("/profiles/flat-triples", {{"Accept", "text/turtle"}});
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Content-Type").starts_with("text/turtle"));
    res = client.Get("/profiles/flat-triples", {{"Accept", "text/html"}});
    REQUIRE(res);
    CHECK(res->status == 303);
    auto head = client.Head("/profiles/flat-triples", {{"Accept", "text/turtle"}});
    REQUIRE(head);
    CHECK(head->status == 200);
    CHECK(client.Get("/missing")->status == 404);
    CHECK(client.Post("/", "", "text/plain")->status == 405);

    holder.replace(Snapshot::load(f.tmp / "snap"));
    CHECK(client.Get("/site/index.md")->status == 200);
    server.stop();
    t.join();
    CHECK_FALSE(server.running());
  }
}
