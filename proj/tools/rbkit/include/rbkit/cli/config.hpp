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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbkit/rdf/format.hpp"

namespace rbkit::cli {

/// Settings read from rbkit.toml. Every key is optional:
///
///   vocabulary_namespace = "https://w3id.org/rbkit/vocab/1.0#"
///   license_allow_list   = ["https://creativecommons.org/licenses/by/4.0/", ...]
///   min_element_count    = 1000
///   cap_ladder           = [10, 100, 1000]
///   formats              = ["nquads"]
///   report_index_url     = "https://example.org/index.txt"
///   source_repo_base     = "https://github.com/example/registry"
struct RegistryConfig {
  std::string vocabularyNamespace;
  std::vector<std::string> licenseAllowList;
  std::uint64_t minElementCount = 1000;
  std::vector<std::uint64_t> capLadder{10, 100, 1000};
  std::vector<rdf::Format> formats{rdf::Format::NQuads};
  std::optional<std::string> reportIndexUrl;
  std::string sourceRepoBase;

  RegistryConfig();
};

/// Parses TOML text. Throws ConfigError naming the key on bad values,
/// unknown keys, or a cap ladder that is not strictly increasing.
RegistryConfig parse_config(std::string_view text, const std::string& origin = "config");

/// Reads `path`. A missing file yields the defaults when `required` is false
/// and IoError otherwise.
RegistryConfig load_config(const std::filesystem::path& path, bool required);

}  // namespace rbkit::cli
