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
#include <json.hpp>
#include <netinet/in.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "rbkit/cli/cli.hpp"
#include "rbkit/cli/config.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/nanopub/nanopub.hpp"
#include "rbkit/rdf/parser.hpp"

extern char** environ;

using namespace rbkit;
using namespace rbkit::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run rbkit_cli(std::vector<std::string> args, bool fixtureConfig = true) {
  if (fixtureConfig) args.insert(args.begin(), {"--config", testing::fixture("config/rbkit.toml").string()});
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& rel : io::list_files(root)) out[rel.generic_string()] = io::read_file(root / rel);
  return out;
}

void copy_reports(const fs::path& dir, std::initializer_list<const char*> names) {
  fs::create_directories(dir);
  for (const char* n : names) {
    fs::copy_file(testing::fixture(std::string("index/") + n + ".trig"), dir / (std::string(n) + ".trig"));
  }
}

const std::vector<std::string> kReportFlags = {
    "report-new", "--task", "https://w3id.org/rbkit/tasks/flat-parsing",
    "--profile", "https://w3id.org/rbkit/profiles/flat-triples", "--profile-version", "1.2.0",
    "--code", "https://github.com/example/bench", "--system", "jena=5.0.0", "--system", "rdf4j=4.3.8",
    "--orcid", "https://orcid.org/0000-0002-1694-233X", "--date", "2024-08-01"};

int free_port() {
  const int fd = socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof addr;
  bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
  getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  close(fd);
  return ntohs(addr.sin_port);
}

}  // namespace

TEST_SUITE("cli.config") {
  TEST_CASE("defaults and overrides") {
    const auto d = parse_config("");
    CHECK(d.minElementCount == 1000);
    CHECK(d.capLadder == std::vector<std::uint64_t>{10, 100, 1000});
    CHECK(d.formats == std::vector{rdf::Format::NQuads});
    const auto c = parse_config(R"(
      min_element_count = 5
      cap_ladder = [1, 2]
      formats = ["nquads", "trig"]
      report_index_url = "https://example.org/index"
      source_repo_base = "https://github.com/o/r"
      license_allow_list = ["https://example.org/l"]
    )");
    CHECK(c.minElementCount == 5);
    CHECK(c.formats.size() == 2);
    CHECK(c.reportIndexUrl == "https://example.org/index");
    CHECK(c.licenseAllowList == std::vector<std::string>{"https://example.org/l"});
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config("cap_ladder = [10, 10]"), ConfigError);
    CHECK_THROWS_AS(parse_config("cap_ladder = [0, 10]"), ConfigError);
    CHECK_THROWS_AS(parse_config("min_element_count = -1"), ConfigError);
    CHECK_THROWS_AS(parse_config("formats = [\"nquads\", \"nquads\"]"), ConfigError);
    CHECK_THROWS_AS(parse_config("formats = [\"rdfxml\"]"), ConfigError);
    CHECK_THROWS_AS(parse_config("colour = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config("min_element_count = "), ConfigError);
  }

  TEST_CASE("loading") {
    testing::TempDir tmp;
    CHECK(load_config(tmp / "absent.toml", false).minElementCount == 1000);
    CHECK_THROWS_AS(load_config(tmp / "absent.toml", true), IoError);
  }
}

TEST_SUITE("cli.validate") {
  TEST_CASE("exit codes follow the findings") {
    testing::TempDir tmp;
    fs::copy(testing::fixture("curator"), tmp / "curator", fs::copy_options::recursive);
    CHECK(rbkit_cli({"validate", (tmp / "curator/compliant/metadata.ttl").string()}, false).code == 0);
    CHECK(fs::exists(tmp / "curator/compliant/metadata.validation.ttl"));
    const auto bad = rbkit_cli({"validate", (tmp / "curator/license").string()}, false);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[open-license]") != std::string::npos);
    CHECK(fs::exists(tmp / "curator/license/validation.ttl"));
    CHECK(rbkit_cli({"validate", (tmp / "missing.ttl").string()}, false).code == 2);
    io::write_file(tmp / "broken.ttl", "this is not turtle");
    CHECK(rbkit_cli({"validate", (tmp / "broken.ttl").string()}, false).code == 2);
  }

  TEST_CASE("dataset directories include the content checks") {
    testing::TempDir tmp;
    fs::copy(testing::fixture("stream20"), tmp / "ds", fs::copy_options::recursive);
    CHECK(rbkit_cli({"validate", (tmp / "ds").string()}).code == 0);
    CHECK(rbkit_cli({"validate", (tmp / "ds").string()}, false).code == 1);
    fs::remove(tmp / "ds/data/0019.ttl");
    const auto r = rbkit_cli({"--json", "validate", (tmp / "ds").string()});
    CHECK(r.code == 1);
    const auto j = json::parse(r.out);
    CHECK(j["results"][0]["violations"][0]["ruleId"] == "element-count-mismatch");
  }

  TEST_CASE("schema problems become violations") {
    testing::TempDir tmp;
    io::write_file(tmp / "m.ttl", "@prefix rb: <https://w3id.org/rbkit/vocab/1.0#> .\n<http://e/d> a rb:Dataset ; rb:identifier \"d\" .");
    const auto r = rbkit_cli({"--json", "validate", (tmp / "m.ttl").string()});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["results"][0]["violations"][0]["path"] == "title");
    io::write_file(tmp / "task.ttl", io::read_file(testing::fixture("catalog/tasks/rdf-patch/metadata.ttl")));
    CHECK(rbkit_cli({"validate", (tmp / "task.ttl").string()}).code == 0);
  }
}

TEST_SUITE("cli.package") {
  TEST_CASE("fixture gives four distributions and reruns identically") {
    testing::TempDir tmp;
    const auto args = std::vector<std::string>{"package", testing::fixture("stream20/data").string(), "--metadata",
                                               testing::fixture("stream20/metadata.ttl").string(), "--out",
                                               (tmp / "out").string()};
    const auto r = rbkit_cli(args);
    CHECK(r.code == 0);
    CHECK(r.out == "packaged 4 distributions into " + (tmp / "out").string() + "\n");
    const auto first = tree(tmp / "out");
    CHECK(first.size() == 7);
    CHECK(rbkit_cli(args).code == 0);
    CHECK(tree(tmp / "out") == first);
  }

  TEST_CASE("invalid source leaves nothing behind") {
    testing::TempDir tmp;
    fs::copy(testing::fixture("stream20/data"), tmp / "data", fs::copy_options::recursive);
    io::write_file(tmp / "data/0005.trig", "<http://e/g> { <http://e/s> <http://e/p> <http://e/o> }");
    fs::remove(tmp / "data/0005.ttl");
    const auto r = rbkit_cli({"package", (tmp / "data").string(), "-m", testing::fixture("stream20/metadata.ttl").string(),
                              "-o", (tmp / "out").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("named-graphs") != std::string::npos);
    CHECK_FALSE(fs::exists(tmp / "out"));
  }

  TEST_CASE("I/O failures") {
    testing::TempDir tmp;
    CHECK(rbkit_cli({"package", (tmp / "none").string(), "-m", testing::fixture("stream20/metadata.ttl").string(), "-o",
                     (tmp / "out").string()})
              .code == 2);
  }
}

TEST_SUITE("cli.fetch_reports") {
  TEST_CASE("two valid reports") {
    testing::TempDir tmp;
    copy_reports(tmp / "index", {"r01", "r02"});
    const auto r = rbkit_cli({"fetch-reports", "--index", (tmp / "index").string(), "--out", (tmp / "cat").string()});
    CHECK(r.code == 0);
    CHECK(io::list_files(tmp / "cat/reports").size() == 2);
    CHECK(io::read_file(tmp / "cat/diagnostics.log").empty());
    CHECK(json::parse(io::read_file(tmp / "cat/reports.json")).size() == 2);
  }

  TEST_CASE("one bad of three") {
    testing::TempDir tmp;
    copy_reports(tmp / "index", {"r01", "r02", "r10"});
    const auto r = rbkit_cli({"fetch-reports", "--index", (tmp / "index").string(), "--out", (tmp / "cat").string()});
    CHECK(r.code == 0);
    CHECK(io::list_files(tmp / "cat/reports").size() == 2);
    const auto log = io::read_file(tmp / "cat/diagnostics.log");
    CHECK(log.find("r10.trig") != std::string::npos);
    CHECK(log.find("empty-assertion") != std::string::npos);
  }

  TEST_CASE("fetched files reparse to the same reports") {
    testing::TempDir tmp;
    const auto r = rbkit_cli({"fetch-reports", "--index", testing::fixture("index").string(), "--out", (tmp / "cat").string()});
    CHECK(r.code == 0);
    for (const auto& f : io::list_files(tmp / "cat/reports")) {
      const auto np = nanopub::parse_nanopub(rdf::parse_document(io::read_file(tmp / "cat/reports" / f), rdf::Format::TriG));
      const auto original = nanopub::parse_nanopub(rdf::parse_document(
          io::read_file(testing::fixture("index") / f), rdf::Format::TriG));
      CHECK(nanopub::extract_report(np) == nanopub::extract_report(original));
    }
  }

  TEST_CASE("unreachable index") {
    testing::TempDir tmp;
    CHECK(rbkit_cli({"fetch-reports", "--index", (tmp / "nowhere").string(), "--out", (tmp / "cat").string()}).code == 2);
    CHECK(rbkit_cli({"fetch-reports", "--index", "http://127.0.0.1:1/index", "--timeout-ms", "300", "--out",
                     (tmp / "cat").string()})
              .code == 2);
    CHECK(rbkit_cli({"fetch-reports", "--out", (tmp / "cat").string()}).code == 2);
    CHECK_FALSE(fs::exists(tmp / "cat/reports"));
  }
}

TEST_SUITE("cli.gen_site") {
  TEST_CASE("fixture catalog, rerun identical") {
    testing::TempDir tmp;
    fs::copy(testing::fixture("catalog"), tmp / "cat", fs::copy_options::recursive);
    copy_reports(tmp / "cat/reports", {"r01", "r03"});
    const auto args = std::vector<std::string>{"gen-site", (tmp / "cat").string(), "--out", (tmp / "snap").string()};
    CHECK(rbkit_cli(args).code == 0);
    const auto first = tree(tmp / "snap");
    std::size_t pages = 0;
    for (const auto& [path, _] : first) pages += path.starts_with("site/");
    CHECK(pages == 2 + 1 + 9 + 2 + 2);
    CHECK(rbkit_cli(args).code == 0);
    CHECK(tree(tmp / "snap") == first);
    CHECK(json::parse(first.at("snapshot.json"))["version"] == "dev");
  }

  TEST_CASE("empty catalog") {
    testing::TempDir tmp;
    fs::create_directories(tmp / "empty");
    CHECK(rbkit_cli({"gen-site", (tmp / "empty").string(), "--out", (tmp / "snap").string(), "--version", "2.0"}).code == 0);
    CHECK(fs::exists(tmp / "snap/site/results/index.md"));
  }

  TEST_CASE("dump") {
    testing::TempDir tmp;
    const auto r = rbkit_cli({"--json", "dump", testing::fixture("catalog").string(), "--out", (tmp / "d").string()});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["statements"].get<int>() > 0);
    CHECK(fs::exists(tmp / "d/catalog.nq"));
    CHECK(fs::exists(tmp / "d/catalog.ttl"));
  }
}

TEST_SUITE("cli.report_new") {
  TEST_CASE("full flag set writes a round-tripping nanopub") {
    testing::TempDir tmp;
    auto args = kReportFlags;
    args.insert(args.end(), {"--out", (tmp / "r.trig").string()});
    CHECK(rbkit_cli(args).code == 0);
    const auto np = nanopub::parse_nanopub(rdf::parse_document(io::read_file(tmp / "r.trig"), rdf::Format::TriG));
    const auto r = nanopub::extract_report(np);
    CHECK(r.profileVersion == "1.2.0");
    CHECK(r.systems.size() == 2);
    CHECK(r.authorOrcid == "0000-0002-1694-233X");
    CHECK(nanopub::format_date(r.date) == "2024-08-01");
    CHECK(r.reportIri.str().starts_with("https://w3id.org/rbkit/reports/"));
    CHECK(rbkit_cli(args).code == 0);
    CHECK(nanopub::extract_report(nanopub::parse_nanopub(
              rdf::parse_document(io::read_file(tmp / "r.trig"), rdf::Format::TriG))) == r);
  }

  TEST_CASE("usage and domain errors exit 1") {
    auto args = kReportFlags;
    args.erase(args.begin() + 1, args.begin() + 3);
    CHECK(rbkit_cli(args).code == 1);
    args = kReportFlags;
    args[args.size() - 3] = "0000-0002-1694-2330";
    CHECK(rbkit_cli(args).code == 1);
    args = kReportFlags;
    args.back() = "01/08/2024";
    CHECK(rbkit_cli(args).code == 1);
    args = kReportFlags;
    args[10] = "jena";
    CHECK(rbkit_cli(args).code == 1);
    CHECK(rbkit_cli({"no-such-command"}).code == 1);
    CHECK(rbkit_cli({"--help"}).code == 0);
  }

  TEST_CASE("stdout output and an explicit IRI") {
    auto args = kReportFlags;
    args.insert(args.end(), {"--iri", "https://example.org/np/mine"});
    const auto r = rbkit_cli(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("<https://example.org/np/mine/Head>") != std::string::npos);
  }
}

TEST_SUITE("cli.global") {
  TEST_CASE("explicit config must exist") {
    testing::TempDir tmp;
    std::ostringstream out, err;
    CHECK(run_cli({"--config", (tmp / "nope.toml").string(), "dump", testing::fixture("catalog").string(), "-o",
                   (tmp / "d").string()},
                  out, err) == 2);
  }

  TEST_CASE("quiet and json") {
    testing::TempDir tmp;
    const auto quiet = rbkit_cli({"--quiet", "dump", testing::fixture("catalog").string(), "-o", (tmp / "d").string()});
    CHECK(quiet.code == 0);
    CHECK(quiet.out.empty());
    const auto failing = rbkit_cli({"--json", "validate", (tmp / "missing.ttl").string()});
    CHECK(failing.code == 2);
    CHECK(json::parse(failing.out)["error"]["type"] == "io");
  }
}

TEST_SUITE("cli.serve") {
  TEST_CASE("serves, reloads on SIGHUP and exits cleanly on SIGTERM") {
    testing::TempDir tmp;
    fs::copy(testing::fixture("catalog"), tmp / "cat", fs::copy_options::recursive);
    REQUIRE(rbkit_cli({"gen-site", (tmp / "cat").string(), "--out", (tmp / "snap").string()}).code == 0);

    const int port = free_port();
    const std::string bind = "127.0.0.1:" + std::to_string(port);
    const std::string exe = RBKIT_EXECUTABLE;
    const std::string snap = (tmp / "snap").string();
    std::vector<char*> argv{const_cast<char*>(exe.c_str()), const_cast<char*>("--quiet"),
                            const_cast<char*>("serve"), const_cast<char*>("--snapshot"),
                            const_cast<char*>(snap.c_str()), const_cast<char*>("--bind"),
                            const_cast<char*>(bind.c_str()), nullptr};
    pid_t pid = 0;
    REQUIRE(posix_spawn(&pid, exe.c_str(), nullptr, nullptr, argv.data(), environ) == 0);
    struct Reaper {
      pid_t& pid;
      ~Reaper() {
        if (pid > 0) {
          kill(pid, SIGKILL);
          waitpid(pid, nullptr, 0);
        }
      }
    } reaper{pid};

    httplib::Client client("127.0.0.1", port);
    httplib::Result res;
    for (int i = 0; i < 100 && !(res = client.Get("/")); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(50));
    REQUIRE(res);
    CHECK(res->status == 303);
    res = client.Get("/tasks/rdf-patch", {{"Accept", "text/turtle"}});
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(client.Get("/unknown/path/here/x")->status == 404);
    auto head = client.Head("/tasks/rdf-patch", {{"Accept", "text/turtle"}});
    REQUIRE(head);
    CHECK(head->status == 200);

    kill(pid, SIGHUP);
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
    CHECK(client.Get("/site/index.md")->status == 200);

    kill(pid, SIGTERM);
    int status = 0;
    REQUIRE(waitpid(pid, &status, 0) == pid);
    pid = 0;
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
  }
}
