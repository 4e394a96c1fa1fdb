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

namespace rbkit {

/// An ORCID iD in its bare hyphenated form, e.g. "0000-0002-1825-0097".
/// Construction verifies the ISO 7064 MOD 11-2 check character.
class Orcid {
 public:
  static constexpr std::string_view kIriPrefix = "https://orcid.org/";

  /// Accepts the bare form or an orcid.org IRI (http or https).
  static std::optional<Orcid> parse(std::string_view text);

  /// True when the 16 characters are well formed and the check digit matches.
  static bool is_valid(std::string_view bare);

  /// Check character for the first 15 digits.
  static char check_digit(std::string_view fifteenDigits);

  const std::string& str() const noexcept { return value_; }
  std::string iri() const { return std::string(kIriPrefix) + value_; }

  friend auto operator<=>(const Orcid&, const Orcid&) = default;

 private:
  explicit Orcid(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

}  // namespace rbkit
