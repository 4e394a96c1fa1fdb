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

#include <algorithm>
#include <cctype>
#include <regex>
#include <tuple>

#include "rbkit/metadata/metadata.hpp"
#include "rbkit/orcid.hpp"

namespace rbkit::metadata {

std::string_view to_string(StreamElementType type) noexcept {
  switch (type) {
    case StreamElementType::Triples: return "triples";
    case StreamElementType::Quads: return "quads";
    case StreamElementType::Graphs: return "graphs";
  }
  return {};
}

std::string_view to_string(Severity severity) noexcept {
  return severity == Severity::Error ? "error" : "warning";
}

void ValidationReport::add(std::string ruleId, std::string path, Severity severity,
                           std::string message) {
  Violation v{std::move(path), severity, std::move(message), std::move(ruleId)};
  const auto key = [](const Violation& x) { return std::tie(x.ruleId, x.path, x.message); };
  const auto at = std::ranges::upper_bound(violations_, key(v), {}, key);
  violations_.insert(at, std::move(v));
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations_) add(v.ruleId, v.path, v.severity, v.message);
}

bool ValidationReport::has_errors() const noexcept { return error_count() > 0; }

std::size_t ValidationReport::error_count() const noexcept {
  return static_cast<std::size_t>(std::ranges::count(violations_, Severity::Error,
                                                     &Violation::severity));
}

std::vector<std::string> ValidationPolicy::default_license_allow_list() {
  return {
      "http://creativecommons.org/publicdomain/zero/1.0/",
      "https://creativecommons.org/licenses/by/4.0/",
      "https://creativecommons.org/licenses/by-sa/4.0/",
      "https://opendatacommons.org/licenses/odbl/1-0/",
      "https://opendatacommons.org/licenses/odbl/",
  };
}

namespace {

// Licence IRIs are compared without scheme and trailing slash, so that the
// http/https and "/" spellings found in the wild all match.
std::string license_key(std::string_view iri) {
  for (const std::string_view scheme : {std::string_view("https://"), std::string_view("http://")}) {
    if (iri.starts_with(scheme)) {
      iri.remove_prefix(scheme.size());
      break;
    }
  }
  while (iri.ends_with('/')) iri.remove_suffix(1);
  std::string out(iri);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_blank(std::string_view s) {
  return std::ranges::all_of(s, [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

ValidationReport validate_dataset_metadata(const DatasetMetadata& md,
                                           const ValidationPolicy& policy) {
  ValidationReport report;

  static const std::regex idPattern("^[a-z0-9][a-z0-9-]*$");
  if (!std::regex_match(md.id, idPattern)) {
    report.add("id-format", "id", Severity::Error,
               "identifier '" + md.id + "' must match [a-z0-9][a-z0-9-]*");
  }

  const auto key = license_key(md.license.str());
  const bool open = std::ranges::any_of(
      policy.licenseAllowList, [&](const std::string& allowed) { return license_key(allowed) == key; });
  if (!open) {
    report.add("open-license", "license", Severity::Error,
               "license <" + md.license.str() + "> is not on the open-license allow-list");
  }

  const bool named = std::ranges::any_of(md.creators, [](const Agent& a) { return !is_blank(a.name); });
  if (!named) {
    report.add("authorship", "creators", Severity::Error,
               md.creators.empty() ? "no creators are listed" : "no creator has a name");
  }
  for (const auto& agent : md.creators) {
    if (agent.orcid && !Orcid::is_valid(*agent.orcid)) {
      report.add("orcid-checksum", "creators.orcid", Severity::Error,
                 "invalid ORCID iD '" + *agent.orcid + "'" +
                     (agent.name.empty() ? "" : " for " + agent.name));
    }
  }

  if (md.declaredElementCount < policy.minElementCount) {
    report.add("sufficient-size", "declaredElementCount", Severity::Error,
               std::to_string(md.declaredElementCount) + " stream elements declared, at least " +
                   std::to_string(policy.minElementCount) + " required");
  }

  if (is_blank(md.useCase)) {
    report.add("clear-use-case", "useCase", Severity::Error, "no use case is described");
  }
  return report;
}

bool profile_accepts(const ProfileMetadata& profile, const DatasetMetadata& md) {
  return std::ranges::all_of(profile.constraints, [&](const Constraint& c) {
    switch (c.kind) {
      case ConstraintKind::ElementTypeIs:
        return std::get<StreamElementType>(c.value) == md.streamElementType;
      case ConstraintKind::MinElementCount:
        return md.declaredElementCount >= std::get<std::uint64_t>(c.value);
      case ConstraintKind::MaxElementCount:
        return md.declaredElementCount <= std::get<std::uint64_t>(c.value);
    }
    return false;
  });
}

std::string render_text(const ValidationReport& report, const std::string& label) {
  std::string out;
  const std::string head = label.empty() ? std::string() : label + ": ";
  if (report.passed()) return head + "ok\n";
  for (const auto& v : report.violations()) {
    out += head;
    out += v.severity == Severity::Error ? "ERROR" : "WARNING";
    out += " [" + v.ruleId + "] " + v.path + ": " + v.message + "\n";
  }
  return out;
}

}  // namespace rbkit::metadata
