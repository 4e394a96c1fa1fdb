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

#include "rbkit/rdf/format.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rbkit::rdf {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view media_type(Format f) noexcept {
  switch (f) {
    case Format::Turtle: return "text/turtle";
    case Format::TriG: return "application/trig";
    case Format::NTriples: return "application/n-triples";
    case Format::NQuads: return "application/n-quads";
  }
  return {};
}

std::string_view extension(Format f) noexcept {
  switch (f) {
    case Format::Turtle: return "ttl";
    case Format::TriG: return "trig";
    case Format::NTriples: return "nt";
    case Format::NQuads: return "nq";
  }
  return {};
}

std::string_view name(Format f) noexcept {
  switch (f) {
    case Format::Turtle: return "turtle";
    case Format::TriG: return "trig";
    case Format::NTriples: return "ntriples";
    case Format::NQuads: return "nquads";
  }
  return {};
}

std::optional<Format> format_from_extension(const std::filesystem::path& path) {
  auto ext = lower(path.extension().string());
  if (ext.empty()) return std::nullopt;
  ext.erase(0, 1);
  for (const auto f : kAllFormats) {
    if (ext == extension(f)) return f;
  }
  return std::nullopt;
}

std::optional<Format> format_from_media_type(std::string_view mediaType) {
  const auto semi = mediaType.find(';');
  const auto bare = lower(trim(mediaType.substr(0, semi)));
  for (const auto f : kAllFormats) {
    if (bare == media_type(f)) return f;
  }
  return std::nullopt;
}

std::optional<Format> format_from_name(std::string_view text) {
  const auto key = lower(trim(text));
  for (const auto f : kAllFormats) {
    if (key == name(f) || key == extension(f)) return f;
  }
  return std::nullopt;
}

}  // namespace rbkit::rdf
