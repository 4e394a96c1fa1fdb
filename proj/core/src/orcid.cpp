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

#include "rbkit/orcid.hpp"

namespace rbkit {

char Orcid::check_digit(std::string_view fifteenDigits) {
  int total = 0;
  for (const char c : fifteenDigits) total = (total + (c - '0')) * 2;
  const int result = (12 - total % 11) % 11;
  return result == 10 ? 'X' : static_cast<char>('0' + result);
}

bool Orcid::is_valid(std::string_view bare) {
  if (bare.size() != 19) return false;
  std::string digits;
  for (std::size_t i = 0; i < bare.size(); ++i) {
    const char c = bare[i];
    if (i % 5 == 4) {
      if (c != '-') return false;
      continue;
    }
    const bool last = i == bare.size() - 1;
    if (last) {
      if (c != check_digit(digits)) return false;
    } else {
      if (c < '0' || c > '9') return false;
      digits += c;
    }
  }
  return true;
}

std::optional<Orcid> Orcid::parse(std::string_view text) {
  for (const std::string_view prefix : {std::string_view("https://orcid.org/"),
                                        std::string_view("http://orcid.org/")}) {
    if (text.starts_with(prefix)) {
      text.remove_prefix(prefix.size());
      break;
    }
  }
  if (!is_valid(text)) return std::nullopt;
  return Orcid(std::string(text));
}

}  // namespace rbkit
