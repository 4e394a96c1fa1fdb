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

#include <optional>
#include <string>
#include <vector>

#include "rbkit/sitegen/catalog.hpp"

namespace rbkit::sitegen {

enum class PageKind { Home, Dataset, Task, Profile, ResultsIndex, Report };

std::string_view to_string(PageKind kind) noexcept;

struct Page {
  /// Site-relative, slash-separated (e.g. "datasets/foo/index.md").
  std::string path;
  PageKind kind = PageKind::Home;
  /// Resource id; empty for the home and results index pages.
  std::string id;
  /// IRI of the resource the page documents; empty for the home and results
  /// index pages.
  std::string iri;
  std::string title;
  /// Markdown without front matter.
  std::string body;
  std::optional<std::string> editUrl;

  /// Front matter (title, edit_url) followed by the body.
  std::string document() const;
};

struct PageOptions {
  /// Repository web root for "Edit this page" links; no links when empty.
  std::string sourceRepoBase;
};

/// base + "/edit/main/" + path, with each path segment percent-encoded.
/// Throws InvalidPathError for an empty or absolute path, or one with ".."
/// segments.
std::string render_edit_url(const std::string& sourceRepoBase, const std::string& sourcePath);

std::string dataset_page_path(const std::string& id);
std::string task_page_path(const std::string& id);
std::string profile_page_path(const std::string& id);
std::string report_page_path(const std::string& id);
inline constexpr std::string_view kHomePagePath = "index.md";
inline constexpr std::string_view kResultsPagePath = "results/index.md";

/// Link from the page at `from` to the page at `to`, both site-relative.
std::string relative_link(const std::string& from, const std::string& to);

Page render_home_page(const Catalog& catalog, const PageOptions& options = {});
Page render_dataset_page(const DatasetEntry& entry, const Catalog& catalog,
                         const PageOptions& options = {});
Page render_task_page(const TaskEntry& entry, const Catalog& catalog,
                      const PageOptions& options = {});
Page render_profile_page(const ProfileEntry& entry, const Catalog& catalog,
                         const PageOptions& options = {});
Page render_report_page(const ReportEntry& entry, const Catalog& catalog,
                        const PageOptions& options = {});

struct ResultsIndex {
  Page page;
  /// One per report citing a task the catalog does not know.
  std::vector<Warning> warnings;
};

/// Reports grouped by task (tasks in id order), each group by date
/// descending. Tasks without reports get an explicit empty marker; reports
/// on unknown tasks go to a final "Unknown task" group.
ResultsIndex render_results_index(const Catalog& catalog, const PageOptions& options = {});

}  // namespace rbkit::sitegen
