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

#include <string>
#include <string_view>
#include <vector>

namespace rbkit::sitegen::md {

/// Inline text with Markdown punctuation backslash-escaped and line breaks
/// folded to spaces.
std::string text(std::string_view s);

/// Link destination with spaces and parentheses percent-encoded.
std::string url(std::string_view s);

std::string link(std::string_view label, std::string_view target);

std::string code(std::string_view s);

/// Pipe table. Cells are used verbatim, so escape them with text() first.
std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows);

/// YAML double-quoted scalar.
std::string yaml_string(std::string_view s);

}  // namespace rbkit::sitegen::md
