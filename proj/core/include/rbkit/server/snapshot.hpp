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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbkit/rdf/dataset.hpp"
#include "rbkit/server/redirects.hpp"
#include "rbkit/sitegen/pages.hpp"

namespace rbkit::server {

/// A page of the snapshot together with the RDF it negotiates to.
struct Resource {
  sitegen::PageKind kind = sitegen::PageKind::Home;
  /// Site-relative page path, as in snapshot.json.
  std::string pagePath;
  std::string id;
  std::string iri;
  /// Dataset, task, profile and report pages: the resource description in
  /// the dump. Results index: union of the report descriptions. Home: the
  /// whole dump.
  rdf::Dataset graph;
};

/// An immutable published tree as written by sitegen::write_site.
class Snapshot {
 public:
  /// Throws SnapshotFormatError when snapshot.json, redirects.conf,
  /// dumps/catalog.nq or site/ is missing or malformed.
  static std::shared_ptr<const Snapshot> load(const std::filesystem::path& dir);

  const std::filesystem::path& root() const noexcept { return root_; }
  const std::string& version() const noexcept { return version_; }
  const RedirectTable& redirects() const noexcept { return *redirects_; }
  const rdf::Dataset& dump() const noexcept { return dump_; }
  /// Keyed by page path.
  const std::map<std::string, Resource, std::less<>>& resources() const noexcept { return resources_; }

  /// Resource behind a site-relative page path; nullptr when unknown.
  const Resource* find(std::string_view pagePath) const;

 private:
  Snapshot() = default;

  std::filesystem::path root_;
  std::string version_;
  std::optional<RedirectTable> redirects_;
  rdf::Dataset dump_;
  std::map<std::string, Resource, std::less<>> resources_;
};

struct Response {
  int status = 200;
  std::string contentType;
  std::string body;
  /// Extra headers (Location, Vary).
  std::map<std::string, std::string> headers;
};

/// Media types offered for a resource, in server preference order.
const std::vector<std::string>& offered_media_types();

/// Content negotiation for one resource: text/html gives 303 to the page
/// under /site/, an RDF type gives 200 with the resource graph in that
/// syntax, and nothing acceptable gives 406 listing the alternatives.
Response negotiate(std::optional<std::string_view> accept, const Resource& resource);

/// The whole request pipeline, as a pure function of the snapshot:
///
///   /site/<file>, /dumps/<file>   static files
///   anything else                 PURL resolution, then negotiation
///
/// GET and HEAD only (405 otherwise); HEAD drops the body. Never throws.
Response handle_request(const Snapshot& snapshot, std::string_view method, std::string_view path,
                        std::optional<std::string_view> accept);

/// The current snapshot; replace() is atomic for readers, each of which
/// keeps the snapshot it got for the whole request.
class SnapshotHolder {
 public:
  explicit SnapshotHolder(std::shared_ptr<const Snapshot> initial) : current_(std::move(initial)) {}

  std::shared_ptr<const Snapshot> get() const {
    std::lock_guard lock(mu_);
    return current_;
  }
  void replace(std::shared_ptr<const Snapshot> next) {
    std::lock_guard lock(mu_);
    current_ = std::move(next);
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace rbkit::server
