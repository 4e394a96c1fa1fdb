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
#include <string>
#include <vector>

#include "rbkit/sitegen/catalog.hpp"
#include "rbkit/sitegen/pages.hpp"

namespace rbkit::sitegen {

struct Site {
  /// Sorted by path.
  std::vector<Page> pages;
  rdf::Dataset dump;
  /// Text of redirects.conf.
  std::string redirects;
  std::vector<Warning> warnings;
};

/// Every page plus the dump. Pages render on up to `workers` threads (0 =
/// hardware concurrency); the result does not depend on the count.
Site generate_site(const Catalog& catalog, const PageOptions& options = {},
                   std::size_t workers = 0);

/// The redirect table covering every page kind; see server::RedirectTable.
std::string default_redirects();

/// Writes the snapshot tree
///
///   site/<page path>
///   dumps/catalog.nq, dumps/catalog.ttl
///   redirects.conf
///   snapshot.json   (version and the page list: path, kind, id, iri)
///
/// staged and moved into `outDir` on success.
void write_site(const Site& site, const std::string& version, const std::filesystem::path& outDir);

}  // namespace rbkit::sitegen
