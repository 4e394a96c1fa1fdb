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

#include "rbkit/rdf/dataset.hpp"
#include "rbkit/rdf/format.hpp"

namespace rbkit::rdf {

/// Parses one document. Turtle and N-Triples always yield default-graph
/// quads. Blank-node labels are scoped to the returned dataset; anonymous
/// nodes (`[]`, collections) receive generated labels that never collide with
/// labels written in the document.
///
/// Throws SyntaxError (with position) on grammar violations, EncodingError on
/// malformed UTF-8, and RelativeIriError when a relative IRI appears and no
/// `base` was given.
Dataset parse_document(std::string_view bytes, Format format,
                       const std::optional<std::string>& base = std::nullopt);

/// Throws EncodingError at the first malformed sequence.
void validate_utf8(std::string_view bytes);

}  // namespace rbkit::rdf
