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

struct MediaRange {
  std::string type;     // lower-case, "*" for any
  std::string subtype;  // lower-case, "*" for any
  double q = 1.0;

  /// 2 for type/subtype, 1 for type/*, 0 for */*.
  int specificity() const noexcept;
  bool matches(std::string_view mediaType) const noexcept;
};

/// Media ranges of an Accept header in header order. Entries that do not
/// parse, or carry an invalid q, are dropped.
std::vector<MediaRange> parse_accept(std::string_view header);

/// Picks from `offered` (in server preference order). Each offered type
/// takes the q of the most specific range matching it; the highest q wins,
/// ties going to the more specific range and then to server preference.
/// Types with q = 0 are never chosen. nullopt when nothing is acceptable.
/// An absent, empty or unparsable header accepts the first offer.
std::optional<std::string> choose_media_type(std::optional<std::string_view> accept,
                                             const std::vector<std::string>& offered);

}  // namespace rbkit::server
