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

#include "rbkit/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <pthread.h>

#include <chrono>
#include <csignal>
#include <iostream>
#include <set>
#include <thread>

#include "rbkit/cli/config.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/nanopub/discovery.hpp"
#include "rbkit/orcid.hpp"
#include "rbkit/package/package.hpp"
#include "rbkit/package/sha256.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/rdf/serializer.hpp"
#include "rbkit/server/http.hpp"
#include "rbkit/sitegen/site.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace rbkit::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  bool json = false;
  RegistryConfig config;
  Vocabulary vocab;

  void say(const std::string& text) const {
    if (!quiet && !json) out << text;
  }
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const SyntaxError*>(&e) ||
      dynamic_cast<const SourceUnavailableError*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const SnapshotFormatError*>(&e) || dynamic_cast<const fs::filesystem_error*>(&e)) {
    return kEnvironmentError;
  }
  if (dynamic_cast<const Error*>(&e)) return kDomainError;
  return kEnvironmentError;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "syntax";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  if (dynamic_cast<const SourceUnavailableError*>(&e)) return "source-unavailable";
  if (dynamic_cast<const ConfigError*>(&e)) return "config";
  if (dynamic_cast<const SnapshotFormatError*>(&e)) return "snapshot";
  if (dynamic_cast<const MissingFieldError*>(&e)) return "missing-field";
  if (dynamic_cast<const TypeMismatchError*>(&e)) return "type-mismatch";
  if (dynamic_cast<const ConflictError*>(&e)) return "conflict";
  if (dynamic_cast<const EmptySourceError*>(&e)) return "empty-source";
  if (dynamic_cast<const FormatCapabilityError*>(&e)) return "format-capability";
  if (dynamic_cast<const StructureError*>(&e)) return "structure";
  return "error";
}

json violations_json(const metadata::ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations()) {
    out.push_back({{"ruleId", v.ruleId}, {"path", v.path},
                   {"severity", metadata::to_string(v.severity)}, {"message", v.message}});
  }
  return out;
}

metadata::ValidationPolicy policy_of(const RegistryConfig& cfg) {
  return {cfg.licenseAllowList, cfg.minElementCount};
}

// ---- validate ---------------------------------------------------------------

struct ValidationTarget {
  fs::path metadataFile;
  std::optional<fs::path> source;
  fs::path reportFile;
};

ValidationTarget target_for(const fs::path& p) {
  std::error_code ec;
  if (fs::is_directory(p, ec)) {
    ValidationTarget t{p / "metadata.ttl", std::nullopt, p / "validation.ttl"};
    if (fs::is_directory(p / "data", ec)) t.source = p / "data";
    else if (fs::is_regular_file(p / "data.tar", ec)) t.source = p / "data.tar";
    return t;
  }
  return {p, std::nullopt, p.parent_path() / (p.stem().string() + ".validation.ttl")};
}

template <typename Fn>
bool schema_checked(metadata::ValidationReport& report, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const MissingFieldError& e) {
    report.add("schema", e.field(), metadata::Severity::Error, e.what());
  } catch (const TypeMismatchError& e) {
    report.add("schema", e.field(), metadata::Severity::Error, e.what());
  }
  return false;
}

int cmd_validate(Context& ctx, const std::vector<std::string>& paths) {
  int code = kOk;
  json results = json::array();
  for (const auto& raw : paths) {
    const ValidationTarget t = target_for(raw);
    rdf::Dataset graph;
    try {
      graph = rdf::parse_document(io::read_file(t.metadataFile), rdf::Format::Turtle);
    } catch (const SyntaxError& e) {
      throw e.in_file(t.metadataFile.string());
    }

    metadata::ValidationReport report;
    std::optional<rdf::Iri> subject;
    std::string kind = "unknown";
    const auto datasets = metadata::typed_subjects(graph, ctx.vocab.Dataset);
    const auto tasks = metadata::typed_subjects(graph, ctx.vocab.Task);
    const auto profiles = metadata::typed_subjects(graph, ctx.vocab.Profile);
    const std::size_t typed = datasets.size() + tasks.size() + profiles.size();
    if (typed != 1) {
      report.add("schema", "type", metadata::Severity::Error,
                 typed == 0 ? "no dataset, task or profile is described"
                            : "exactly one dataset, task or profile must be described");
    } else if (!datasets.empty()) {
      kind = "dataset";
      subject = datasets.front();
      std::optional<metadata::DatasetMetadata> md;
      schema_checked(report, [&] { md = metadata::extract_dataset_metadata(graph, *subject, ctx.vocab); });
      if (md) {
        report.merge(metadata::validate_dataset_metadata(*md, policy_of(ctx.config)));
        if (t.source) report.merge(package::validate_contents(package::load_source(*t.source), *md));
      }
    } else if (!tasks.empty()) {
      kind = "task";
      subject = tasks.front();
      schema_checked(report, [&] { metadata::extract_task_metadata(graph, *subject, ctx.vocab); });
    } else {
      kind = "profile";
      subject = profiles.front();
      schema_checked(report, [&] { metadata::extract_profile_metadata(graph, *subject, ctx.vocab); });
    }

    io::write_file(t.reportFile,
                   rdf::serialize_document(metadata::to_rdf(report, subject, ctx.vocab), rdf::Format::Turtle));
    if (report.has_errors()) code = kDomainError;
    ctx.say(metadata::render_text(report, raw));
    results.push_back({{"path", raw}, {"kind", kind}, {"passed", !report.has_errors()},
                       {"report", t.reportFile.string()}, {"violations", violations_json(report)}});
  }
  if (ctx.json) ctx.out << json{{"command", "validate"}, {"results", results}}.dump(2) << "\n";
  return code;
}

// ---- package ----------------------------------------------------------------

int cmd_package(Context& ctx, const fs::path& source, const fs::path& metadataFile, const fs::path& outDir) {
  package::PackageOptions options;
  options.ladder = ctx.config.capLadder;
  options.formats = ctx.config.formats;
  options.policy = policy_of(ctx.config);
  const auto result = package::package_dataset(source, metadataFile, outDir, options, ctx.vocab);

  if (ctx.json) {
    json dists = json::array();
    for (const auto& d : result.distributions) {
      dists.push_back({{"fileName", d.fileName}, {"byteSize", d.byteSize}, {"sha256", d.sha256}});
    }
    const auto& s = result.statistics;
    ctx.out << json{{"command", "package"},
                    {"written", result.written},
                    {"violations", violations_json(result.validation)},
                    {"statistics", {{"elementCount", s.elementCount}, {"totalStatements", s.totalStatements},
                                    {"distinctSubjects", s.distinctSubjects},
                                    {"distinctPredicates", s.distinctPredicates},
                                    {"distinctObjects", s.distinctObjects},
                                    {"usesNamedGraphs", s.usesNamedGraphs}}},
                    {"distributions", dists}}
                       .dump(2)
            << "\n";
  }
  if (!result.written) {
    if (!ctx.json) ctx.err << metadata::render_text(result.validation, metadataFile.string());
    return kDomainError;
  }
  if (!result.validation.passed()) ctx.say(metadata::render_text(result.validation, metadataFile.string()));
  ctx.say("packaged " + std::to_string(result.distributions.size()) + " distributions into " +
          outDir.string() + "\n");
  return kOk;
}

// ---- fetch-reports ----------------------------------------------------------

int cmd_fetch_reports(Context& ctx, const std::optional<std::string>& indexFlag, const fs::path& outDir,
                      std::size_t parallelism, int timeoutMs) {
  const auto index = indexFlag ? indexFlag : ctx.config.reportIndexUrl;
  if (!index) throw ConfigError("no report index: pass --index or set report_index_url");
  auto source = nanopub::open_index_source(*index, {std::chrono::milliseconds(timeoutMs)});
  nanopub::DiscoveryOptions options;
  options.parallelism = parallelism;
  options.vocab = &ctx.vocab;
  const auto result = nanopub::discover_reports(*source, options);

  json reports = json::array();
  {
    io::StagedDirectory stage(outDir / "reports");
    std::set<std::string> used{"index"};
    for (const auto& r : result.reports) {
      const std::string slug = sitegen::report_slug(r.report.reportIri);
      std::string name = slug;
      for (int n = 2; !used.insert(name).second; ++n) name = slug + "-" + std::to_string(n);
      io::write_file(stage.path() / (name + ".trig"),
                     rdf::serialize_document(r.nanopub.to_dataset(), rdf::Format::TriG));
      json systems = json::array();
      for (const auto& s : r.report.systems) systems.push_back({{"name", s.name}, {"version", s.version}});
      reports.push_back({{"file", "reports/" + name + ".trig"},
                         {"source", r.sourceIri},
                         {"reportIri", r.report.reportIri.str()},
                         {"task", r.report.task.str()},
                         {"profile", r.report.profile.str()},
                         {"profileVersion", r.report.profileVersion},
                         {"benchmarkCode", r.report.benchmarkCode.str()},
                         {"systems", systems},
                         {"authorOrcid", r.report.authorOrcid},
                         {"date", nanopub::format_date(r.report.date)},
                         {"resultsLink", r.report.resultsLink ? json(r.report.resultsLink->str()) : json()}});
    }
    stage.commit();
  }
  json diagnostics = json::array();
  std::string log;
  for (const auto& d : result.diagnostics) {
    diagnostics.push_back({{"iri", d.iri}, {"message", d.message}});
    log += d.iri + "\t" + d.message + "\n";
  }
  io::write_file(outDir / "reports.json", reports.dump(2) + "\n");
  io::write_file(outDir / "diagnostics.log", log);

  if (ctx.json) {
    ctx.out << json{{"command", "fetch-reports"}, {"reports", reports}, {"diagnostics", diagnostics}}.dump(2) << "\n";
  }
  ctx.say("fetched " + std::to_string(result.reports.size()) + " reports, " +
          std::to_string(result.diagnostics.size()) + " diagnostics\n");
  if (!ctx.json) {
    for (const auto& d : result.diagnostics) ctx.err << "warning: " << d.iri << ": " << d.message << "\n";
  }
  return kOk;
}

// ---- gen-site / dump ----------------------------------------------------------

int cmd_gen_site(Context& ctx, const fs::path& catalogDir, const fs::path& outDir, const std::string& version) {
  const auto catalog = sitegen::load_catalog(catalogDir, version, ctx.vocab);
  const auto site = sitegen::generate_site(catalog, {ctx.config.sourceRepoBase});
  sitegen::write_site(site, version, outDir);
  if (ctx.json) {
    json warnings = json::array();
    for (const auto& w : site.warnings) warnings.push_back({{"subject", w.subject}, {"message", w.message}});
    ctx.out << json{{"command", "gen-site"}, {"pages", site.pages.size()}, {"statements", site.dump.size()},
                    {"warnings", warnings}}
                   .dump(2)
            << "\n";
  } else {
    for (const auto& w : site.warnings) ctx.err << "warning: " << w.subject << ": " << w.message << "\n";
  }
  ctx.say("generated " + std::to_string(site.pages.size()) + " pages and a dump of " +
          std::to_string(site.dump.size()) + " statements into " + outDir.string() + "\n");
  return kOk;
}

int cmd_dump(Context& ctx, const fs::path& catalogDir, const fs::path& outDir) {
  const auto catalog = sitegen::load_catalog(catalogDir, "dev", ctx.vocab);
  const auto dump = sitegen::metadata_dump(catalog, ctx.vocab);
  io::StagedDirectory stage(outDir);
  io::write_file(stage.path() / "catalog.nq", rdf::serialize_document(dump, rdf::Format::NQuads));
  io::write_file(stage.path() / "catalog.ttl", rdf::serialize_document(dump, rdf::Format::Turtle));
  stage.commit();
  if (ctx.json) ctx.out << json{{"command", "dump"}, {"statements", dump.size()}}.dump(2) << "\n";
  ctx.say("wrote " + std::to_string(dump.size()) + " statements to " + outDir.string() + "\n");
  return kOk;
}

// ---- serve ------------------------------------------------------------------

int cmd_serve(Context& ctx, const fs::path& snapshotDir, const std::string& bindFlag) {
  const auto bind = bindFlag.empty() ? server::BindAddress::from_environment() : server::BindAddress::parse(bindFlag);
  server::SnapshotHolder holder(server::Snapshot::load(snapshotDir));

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigaddset(&signals, SIGHUP);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  server::HttpServer http(holder);
  const int port = http.bind(bind.host, bind.port);
  ctx.say("serving " + snapshotDir.string() + " on http://" + bind.host + ":" + std::to_string(port) + "\n");
  ctx.out.flush();

  std::thread watcher([&] {
    for (;;) {
      int sig = 0;
      if (sigwait(&signals, &sig) != 0) continue;
      if (sig == SIGHUP) {
        try {
          holder.replace(server::Snapshot::load(snapshotDir));
          ctx.err << "reloaded " << snapshotDir.string() << "\n";
        } catch (const std::exception& e) {
          ctx.err << "reload failed, keeping the old snapshot: " << e.what() << "\n";
        }
        continue;
      }
      http.stop();
      return;
    }
  });
  http.listen();
  if (http.running()) http.stop();
  pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  return kOk;
}

// ---- report-new -------------------------------------------------------------

struct ReportFlags {
  std::string iri, task, profile, profileVersion, code, orcid, date, resultsLink, out;
  std::vector<std::string> systems;
};

int cmd_report_new(Context& ctx, const ReportFlags& f) {
  nanopub::BenchmarkRunReport r{
      .reportIri = rdf::Iri("urn:x-rbkit:pending"),
      .task = rdf::Iri(f.task),
      .profile = rdf::Iri(f.profile),
      .profileVersion = f.profileVersion,
      .benchmarkCode = rdf::Iri(f.code),
      .systems = {},
      .authorOrcid = f.orcid,
      .date = {},
      .resultsLink = f.resultsLink.empty() ? std::nullopt : std::optional(rdf::Iri(f.resultsLink)),
  };
  if (auto o = Orcid::parse(f.orcid)) r.authorOrcid = o->str();
  for (const auto& s : f.systems) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw TypeMismatchError("systems", "expected name=version, got '" + s + "'");
    }
    r.systems.push_back({s.substr(0, eq), s.substr(eq + 1)});
  }
  if (f.date.empty()) {
    r.date = std::chrono::year_month_day(std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now()));
  } else {
    const auto d = nanopub::parse_date(f.date);
    if (!d) throw TypeMismatchError("date", "expected YYYY-MM-DD, got '" + f.date + "'");
    r.date = *d;
  }
  if (!f.iri.empty()) {
    r.reportIri = rdf::Iri(f.iri);
  } else {
    std::string key = r.task.str() + "\n" + r.profile.str() + "\n" + r.profileVersion + "\n" +
                      r.benchmarkCode.str() + "\n" + r.authorOrcid + "\n" + nanopub::format_date(r.date);
    for (const auto& s : r.systems) key += "\n" + s.name + "=" + s.version;
    r.reportIri = rdf::Iri("https://w3id.org/rbkit/reports/" + package::sha256_hex(key).substr(0, 16));
  }

  const auto np = nanopub::build_report_nanopub(r, std::nullopt, ctx.vocab);
  const std::string trig = rdf::serialize_document(np.to_dataset(), rdf::Format::TriG);
  // The emitted file must read back as the same report.
  const auto back = nanopub::extract_report(
      nanopub::parse_nanopub(rdf::parse_document(trig, rdf::Format::TriG)), ctx.vocab);
  if (!(back == r)) throw Error("internal error: report does not round-trip");

  if (f.out.empty() || f.out == "-") {
    ctx.out << trig;
  } else {
    io::write_file(f.out, trig);
    if (ctx.json) ctx.out << json{{"command", "report-new"}, {"reportIri", r.reportIri.str()}, {"file", f.out}}.dump(2) << "\n";
    ctx.say("wrote " + r.reportIri.str() + " to " + f.out + "\n");
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark registry tooling: validate, package, publish and serve RDF stream datasets."};
  app.name("rbkit");
  app.require_subcommand(1);
  app.set_version_flag("--version-info", "rbkit 0.3.0");

  std::string configPath = "rbkit.toml";
  bool quiet = false;
  bool asJson = false;
  auto* configOpt = app.add_option("--config", configPath, "TOML configuration file")->capture_default_str();
  app.add_flag("--quiet,-q", quiet, "Only print diagnostics");
  app.add_flag("--json", asJson, "Machine-readable output on stdout");

  std::vector<std::string> validatePaths;
  auto* validate = app.add_subcommand("validate", "Check metadata files or dataset directories");
  validate->add_option("paths", validatePaths, "metadata.ttl files or dataset directories")->required();

  std::string pkgSource, pkgMetadata, pkgOut;
  auto* pkg = app.add_subcommand("package", "Validate a source and build its distributions");
  pkg->add_option("source", pkgSource, "Directory or .tar of stream element files")->required();
  pkg->add_option("--metadata,-m", pkgMetadata, "Dataset metadata (Turtle)")->required();
  pkg->add_option("--out,-o", pkgOut, "Output directory")->required();

  std::optional<std::string> fetchIndex;
  std::string fetchOut;
  std::size_t fetchParallel = 4;
  int fetchTimeout = 10000;
  auto* fetch = app.add_subcommand("fetch-reports", "Discover benchmark run report nanopublications");
  fetch->add_option("--index", fetchIndex, "Index URL or directory of .trig files");
  fetch->add_option("--out,-o", fetchOut, "Catalog directory to write reports/ into")->required();
  fetch->add_option("--parallel", fetchParallel, "Concurrent fetches")->check(CLI::Range(1, 64))->capture_default_str();
  fetch->add_option("--timeout-ms", fetchTimeout, "Per-request timeout")->check(CLI::PositiveNumber)->capture_default_str();

  std::string siteCatalog, siteOut, siteVersion = "dev";
  auto* gen = app.add_subcommand("gen-site", "Generate pages, dumps and the redirect table");
  gen->add_option("catalog", siteCatalog, "Catalog directory")->required();
  gen->add_option("--out,-o", siteOut, "Snapshot output directory")->required();
  gen->add_option("--version", siteVersion, "Published version")->capture_default_str();

  std::string serveDir, serveBind;
  auto* serve = app.add_subcommand("serve", "Serve a snapshot until SIGINT or SIGTERM, reload on SIGHUP");
  serve->add_option("--snapshot", serveDir, "Snapshot directory")->required();
  serve->add_option("--bind", serveBind, "host:port (default: RBKIT_BIND or 127.0.0.1:8080)");

  ReportFlags rf;
  auto* reportNew = app.add_subcommand("report-new", "Write a benchmark run report nanopublication");
  reportNew->add_option("--task", rf.task, "Task IRI")->required();
  reportNew->add_option("--profile", rf.profile, "Profile IRI")->required();
  reportNew->add_option("--profile-version", rf.profileVersion, "Profile version")->required();
  reportNew->add_option("--code", rf.code, "Benchmark code IRI")->required();
  reportNew->add_option("--system", rf.systems, "Evaluated system as name=version, repeatable")->required();
  reportNew->add_option("--orcid", rf.orcid, "Author ORCID iD")->required();
  reportNew->add_option("--date", rf.date, "YYYY-MM-DD (default: today, UTC)");
  reportNew->add_option("--results-link", rf.resultsLink, "Link to detailed results");
  reportNew->add_option("--iri", rf.iri, "Nanopublication IRI (default: derived from the fields)");
  reportNew->add_option("--out,-o", rf.out, "Output .trig file (default: stdout)");

  std::string dumpCatalog, dumpOut;
  auto* dump = app.add_subcommand("dump", "Write only the metadata dumps");
  dump->add_option("catalog", dumpCatalog, "Catalog directory")->required();
  dump->add_option("--out,-o", dumpOut, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  Context ctx{out, err, quiet, asJson, {}, Vocabulary()};
  try {
    ctx.config = load_config(configPath, configOpt->count() > 0);
    ctx.vocab = Vocabulary(ctx.config.vocabularyNamespace);

    if (*validate) return cmd_validate(ctx, validatePaths);
    if (*pkg) return cmd_package(ctx, pkgSource, pkgMetadata, pkgOut);
    if (*fetch) return cmd_fetch_reports(ctx, fetchIndex, fetchOut, fetchParallel, fetchTimeout);
    if (*gen) return cmd_gen_site(ctx, siteCatalog, siteOut, siteVersion);
    if (*serve) return cmd_serve(ctx, serveDir, serveBind);
    if (*reportNew) return cmd_report_new(ctx, rf);
    if (*dump) return cmd_dump(ctx, dumpCatalog, dumpOut);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    if (ctx.json) {
      out << json{{"error", {{"type", error_type(e)}, {"message", e.what()}, {"exitCode", code}}}}.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return code;
  }
  return kDomainError;
}

}  // namespace rbkit::cli
