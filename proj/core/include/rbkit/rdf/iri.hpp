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

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace rbkit::rdf {

/// True when `text` starts with an RFC 3986 scheme followed by ':'.
bool has_scheme(std::string_view text) noexcept;

/// Resolves `reference` against the absolute `base` (RFC 3986 section 5.2,
/// strict mode). `base` must itself be absolute.
std::string resolve_iri(std::string_view base, std::string_view reference);

/// An absolute IRI. Construction rejects anything without a scheme, so a
/// relative reference can never be stored as an Iri.
class Iri {
 public:
  explicit Iri(std::string value);

  /// Returns nullopt instead of throwing.
  static std::optional<Iri> try_parse(std::string value);

  const std::string& str() const noexcept { return value_; }
  std::string_view view() const noexcept { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  struct Unchecked {};
  Iri(std::string value, Unchecked) : value_(std::move(value)) {}

  std::string value_;
};

}  // namespace rbkit::rdf
