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
#include <string_view>
#include <vector>

namespace rbkit::server {

/// One `pattern -> target` line. Patterns are absolute paths whose segments
/// are literals or `{name}` placeholders matching exactly one non-empty
/// segment; targets may use the same placeholders.
struct RedirectRule {
  std::string pattern;
  std::string target;

  friend bool operator==(const RedirectRule&, const RedirectRule&) = default;
};

/// PURL table. Construction checks that no path can match two patterns, so
/// resolution order never matters.
class RedirectTable {
 public:
  /// Throws SnapshotFormatError on a malformed rule, an undefined target
  /// placeholder, or two overlapping patterns.
  explicit RedirectTable(std::vector<RedirectRule> rules);

  /// Reads the redirects.conf format: one rule per line, `#` comments and
  /// blank lines ignored. Throws SnapshotFormatError with the line number.
  static RedirectTable parse(std::string_view text);

  /// Target of the pattern matching `path`, placeholders substituted. A
  /// trailing slash is ignored. A `{version}` placeholder accepts "dev" and
  /// `currentVersion` only. Throws NotFoundError when nothing matches.
  std::string resolve(std::string_view path, std::string_view currentVersion) const;
  std::optional<std::string> try_resolve(std::string_view path, std::string_view currentVersion) const;

  /// Indices of every rule whose pattern matches `path` syntactically, with
  /// no version check. Disjointness means this has at most one element.
  std::vector<std::size_t> matching_rules(std::string_view path) const;

  const std::vector<RedirectRule>& rules() const noexcept { return rules_; }

 private:
  struct Segment {
    std::string text;
    bool placeholder = false;
  };
  struct Compiled {
    std::vector<Segment> pattern;
    std::vector<Segment> target;
  };

  static std::vector<Segment> compile(std::string_view path);
  static bool overlap(const std::vector<Segment>& a, const std::vector<Segment>& b);

  std::vector<RedirectRule> rules_;
  std::vector<Compiled> compiled_;
};

/// Path segments of `path` ("/a/b/" gives {"a", "b"}; "/" gives {}).
std::vector<std::string> split_path(std::string_view path);

}  // namespace rbkit::server
