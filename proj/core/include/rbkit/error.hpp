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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rbkit {

/// Base of every error raised by rbkit. Callers that only need a message can
/// catch this; the subclasses carry the structured detail.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Position inside a text document. Both fields are 1-based; column counts
/// code points, not bytes.
struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(TextPosition pos, std::string message,
              std::optional<std::string> file = std::nullopt);

  const TextPosition& position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }
  const std::optional<std::string>& file() const noexcept { return file_; }

  /// Same error, attributed to `file`.
  SyntaxError in_file(std::string file) const;

 private:
  TextPosition pos_;
  std::string message_;
  std::optional<std::string> file_;
};

class EncodingError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class RelativeIriError : public SyntaxError {
 public:
  RelativeIriError(TextPosition pos, const std::string& iri);
  explicit RelativeIriError(const std::string& iri);
};

/// Named graphs were handed to a triples-only syntax.
class FormatCapabilityError : public Error {
 public:
  using Error::Error;
};

class ComplexityLimitError : public Error {
 public:
  ComplexityLimitError(std::size_t blankNodes, std::size_t limit);
};

/// A required property is absent from a metadata or report graph.
class MissingFieldError : public Error {
 public:
  explicit MissingFieldError(std::string field);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A property is present but its value has the wrong shape.
class TypeMismatchError : public Error {
 public:
  TypeMismatchError(std::string field, const std::string& detail);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

class EmptySourceError : public Error {
 public:
  using Error::Error;
};

/// Nanopublication structure rule failure. `rule()` is one of the stable
/// rule identifiers (e.g. "missing-provenance").
class StructureError : public Error {
 public:
  StructureError(std::string rule, const std::string& detail);
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

class SourceUnavailableError : public Error {
 public:
  using Error::Error;
};

class InvalidPathError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class SnapshotFormatError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing the local file system failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbkit
