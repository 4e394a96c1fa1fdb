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

#include "rbkit/error.hpp"

#include <utility>

namespace rbkit {

namespace {

std::string format_syntax(const TextPosition& pos, const std::string& message,
                          const std::optional<std::string>& file) {
  std::string out;
  if (file) out += *file + ":";
  out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  return out;
}

}  // namespace

SyntaxError::SyntaxError(TextPosition pos, std::string message,
                         std::optional<std::string> file)
    : Error(format_syntax(pos, message, file)),
      pos_(pos),
      message_(std::move(message)),
      file_(std::move(file)) {}

SyntaxError SyntaxError::in_file(std::string file) const {
  return SyntaxError(pos_, message_, std::move(file));
}

RelativeIriError::RelativeIriError(TextPosition pos, const std::string& iri)
    : SyntaxError(pos, "relative IRI <" + iri + "> with no base IRI") {}

RelativeIriError::RelativeIriError(const std::string& iri)
    : RelativeIriError(TextPosition{0, 0}, iri) {}

ComplexityLimitError::ComplexityLimitError(std::size_t blankNodes, std::size_t limit)
    : Error("isomorphism search over " + std::to_string(blankNodes) +
            " ambiguous blank nodes exceeds the limit of " + std::to_string(limit)) {}

MissingFieldError::MissingFieldError(std::string field)
    : Error("missing required field: " + field), field_(std::move(field)) {}

TypeMismatchError::TypeMismatchError(std::string field, const std::string& detail)
    : Error(field + ": " + detail), field_(std::move(field)) {}

StructureError::StructureError(std::string rule, const std::string& detail)
    : Error(rule + ": " + detail), rule_(std::move(rule)) {}

}  // namespace rbkit
