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
#include <optional>
#include <string_view>

namespace rbkit::rdf {

enum class Format { Turtle, TriG, NTriples, NQuads };

inline constexpr Format kAllFormats[] = {Format::Turtle, Format::TriG, Format::NTriples,
                                         Format::NQuads};

/// Turtle and N-Triples carry only the default graph.
constexpr bool supports_named_graphs(Format f) noexcept {
  return f == Format::TriG || f == Format::NQuads;
}

std::string_view media_type(Format f) noexcept;
/// File extension without the dot: ttl, trig, nt, nq.
std::string_view extension(Format f) noexcept;
/// Short name used in config files and CLI flags: turtle, trig, ntriples, nquads.
std::string_view name(Format f) noexcept;

std::optional<Format> format_from_extension(const std::filesystem::path& path);
/// Ignores parameters (";charset=...") and case.
std::optional<Format> format_from_media_type(std::string_view mediaType);
/// Accepts the short name or the extension.
std::optional<Format> format_from_name(std::string_view name);

}  // namespace rbkit::rdf
