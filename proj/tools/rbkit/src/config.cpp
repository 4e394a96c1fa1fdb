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

#include "rbkit/cli/config.hpp"

#include <toml.hpp>

#include <set>
#include <sstream>

#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/types.hpp"
#include "rbkit/rdf/iri.hpp"
#include "rbkit/vocab.hpp"

namespace rbkit::cli {

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& key, const std::string& why) {
  throw ConfigError(origin + ": " + key + ": " + why);
}

std::string iri_value(const toml::node& node, const std::string& origin, const std::string& key) {
  const auto v = node.value<std::string>();
  if (!v) bad(origin, key, "expected a string");
  if (!rdf::Iri::try_parse(*v)) bad(origin, key, "not an absolute IRI: " + *v);
  return *v;
}

std::uint64_t count_value(const toml::node& node, const std::string& origin, const std::string& key) {
  const auto v = node.value<std::int64_t>();
  if (!v || !node.is_integer()) bad(origin, key, "expected an integer");
  if (*v < 0) bad(origin, key, "must not be negative");
  return static_cast<std::uint64_t>(*v);
}

const toml::array& array_value(const toml::node& node, const std::string& origin, const std::string& key) {
  const auto* a = node.as_array();
  if (!a) bad(origin, key, "expected an array");
  return *a;
}

}  // namespace

RegistryConfig::RegistryConfig()
    : vocabularyNamespace(kDefaultVocabularyNamespace),
      licenseAllowList(metadata::ValidationPolicy::default_license_allow_list()) {}

RegistryConfig parse_config(std::string_view text, const std::string& origin) {
  toml::table table;
  try {
    table = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << origin << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
        << e.description();
    throw ConfigError(msg.str());
  }

  RegistryConfig cfg;
  for (const auto& [k, node] : table) {
    const std::string key(k.str());
    if (key == "vocabulary_namespace") {
      cfg.vocabularyNamespace = iri_value(node, origin, key);
    } else if (key == "license_allow_list") {
      cfg.licenseAllowList.clear();
      for (const auto& item : array_value(node, origin, key)) cfg.licenseAllowList.push_back(iri_value(item, origin, key));
    } else if (key == "min_element_count") {
      cfg.minElementCount = count_value(node, origin, key);
    } else if (key == "cap_ladder") {
      cfg.capLadder.clear();
      for (const auto& item : array_value(node, origin, key)) {
        const auto cap = count_value(item, origin, key);
        if (cap == 0) bad(origin, key, "caps must be positive");
        if (!cfg.capLadder.empty() && cap <= cfg.capLadder.back()) bad(origin, key, "must be strictly increasing");
        cfg.capLadder.push_back(cap);
      }
    } else if (key == "formats") {
      cfg.formats.clear();
      std::set<rdf::Format> seen;
      for (const auto& item : array_value(node, origin, key)) {
        const auto name = item.value<std::string>();
        const auto f = name ? rdf::format_from_name(*name) : std::nullopt;
        if (!f) bad(origin, key, "unknown format " + name.value_or("(not a string)"));
        if (!seen.insert(*f).second) bad(origin, key, "format listed twice: " + *name);
        cfg.formats.push_back(*f);
      }
      if (cfg.formats.empty()) bad(origin, key, "at least one format is required");
    } else if (key == "report_index_url") {
      const auto v = node.value<std::string>();
      if (!v || v->empty()) bad(origin, key, "expected a non-empty string");
      cfg.reportIndexUrl = *v;
    } else if (key == "source_repo_base") {
      cfg.sourceRepoBase = iri_value(node, origin, key);
    } else {
      bad(origin, key, "unknown key");
    }
  }
  return cfg;
}

RegistryConfig load_config(const std::filesystem::path& path, bool required) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    if (required) throw IoError("config file not found: " + path.string());
    return {};
  }
  return parse_config(io::read_file(path), path.string());
}

}  // namespace rbkit::cli
