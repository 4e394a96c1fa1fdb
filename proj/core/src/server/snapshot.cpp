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

#include "rbkit/server/snapshot.hpp"

#include "json.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/sitegen/catalog.hpp"

namespace fs = std::filesystem;

namespace rbkit::server {

namespace {

std::optional<sitegen::PageKind> page_kind(std::string_view s) {
  using sitegen::PageKind;
  for (const auto k : {PageKind::Home, PageKind::Dataset, PageKind::Task, PageKind::Profile,
                       PageKind::ResultsIndex, PageKind::Report}) {
    if (sitegen::to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string read_required(const fs::path& root, const char* rel) {
  try {
    return io::read_file(root / rel);
  } catch (const IoError&) {
    throw SnapshotFormatError(std::string("snapshot is missing ") + rel + ": " + root.string());
  }
}

}  // namespace

std::shared_ptr<const Snapshot> Snapshot::load(const fs::path& dir) {
  std::shared_ptr<Snapshot> s(new Snapshot());
  s->root_ = dir;
  std::error_code ec;
  if (!fs::is_directory(dir / "site", ec)) throw SnapshotFormatError("snapshot is missing site/: " + dir.string());

  const std::string manifestText = read_required(dir, "snapshot.json");
  s->redirects_ = RedirectTable::parse(read_required(dir, "redirects.conf"));
  try {
    s->dump_ = rdf::parse_document(read_required(dir, "dumps/catalog.nq"), rdf::Format::NQuads);
  } catch (const SyntaxError& e) {
    throw SnapshotFormatError(std::string("dumps/catalog.nq: ") + e.what());
  }
  metadata::add_standard_prefixes(s->dump_);

  try {
    const auto manifest = nlohmann::json::parse(manifestText);
    s->version_ = manifest.at("version").get<std::string>();
    for (const auto& p : manifest.at("pages")) {
      Resource r;
      const auto kind = page_kind(p.at("kind").get<std::string>());
      if (!kind) throw SnapshotFormatError("unknown page kind " + p.at("kind").dump());
      r.kind = *kind;
      r.pagePath = p.at("path").get<std::string>();
      r.id = p.at("id").get<std::string>();
      r.iri = p.at("iri").get<std::string>();
      s->resources_.emplace(r.pagePath, std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SnapshotFormatError(std::string("snapshot.json: ") + e.what());
  }

  rdf::Dataset allReports;
  for (auto& [path, r] : s->resources_) {
    if (r.iri.empty()) continue;
    const auto iri = rdf::Iri::try_parse(r.iri);
    if (!iri) throw SnapshotFormatError("snapshot.json: not an absolute IRI: " + r.iri);
    r.graph = sitegen::describe_resource(s->dump_, *iri);
    if (r.kind == sitegen::PageKind::Report) allReports.merge(r.graph);
  }
  for (auto& [path, r] : s->resources_) {
    if (r.kind == sitegen::PageKind::Home) r.graph = s->dump_;
    if (r.kind == sitegen::PageKind::ResultsIndex) r.graph = allReports;
  }
  return s;
}

const Resource* Snapshot::find(std::string_view pagePath) const {
  const auto it = resources_.find(pagePath);
  return it == resources_.end() ? nullptr : &it->second;
}

}  // namespace rbkit::server
