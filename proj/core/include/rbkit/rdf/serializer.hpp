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

#include <map>
#include <string>

#include "rbkit/rdf/dataset.hpp"
#include "rbkit/rdf/format.hpp"

namespace rbkit::rdf {

struct SerializeOptions {
  /// Relabeled blank nodes are written as `<prefix>0`, `<prefix>1`, ...
  std::string blankPrefix = "b";
};

/// Deterministic serialization. Blank nodes are relabeled by first appearance
/// in canonical order, and statements are emitted in canonical order; for
/// N-Triples/N-Quads that is exactly one statement per line.
///
/// Throws FormatCapabilityError when the dataset has named graphs and
/// `format` is Turtle or N-Triples.
std::string serialize_document(const Dataset& dataset, Format format,
                               const SerializeOptions& options = {});

/// The relabeling serialize_document applies: every blank node of `dataset`
/// mapped to `<prefix>N`. Blank nodes are first ordered by a label-independent
/// color refinement, so datasets that differ only in labels usually map to
/// identical output; ties fall back to the original labels.
std::map<Term, Term> canonical_blank_labels(const Dataset& dataset,
                                            const std::string& prefix = "b");

/// Dataset with canonical_blank_labels applied.
Dataset canonicalize(const Dataset& dataset, const std::string& prefix = "b");

}  // namespace rbkit::rdf
