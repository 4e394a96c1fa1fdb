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

// Color refinement over blank nodes, shared by the isomorphism check and the
// deterministic serializer. Colors are 64-bit hashes of label-independent
// signatures, so two datasets that differ only in blank-node labels refine to
// the same colors.

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "rbkit/rdf/dataset.hpp"

namespace rbkit::rdf::detail {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

using Coloring = std::map<Term, std::uint64_t>;

/// Incidence of each blank node in the quads of one dataset.
class BlankGraph {
 public:
  explicit BlankGraph(const Dataset& dataset);

  const std::vector<Term>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Every node starts with the same color.
  Coloring uniform_coloring() const;

  /// One refinement round.
  Coloring refine_once(const Coloring& colors) const;

  static std::size_t class_count(const Coloring& colors);

 private:
  std::vector<Term> nodes_;
  std::vector<const Quad*> quads_;
  std::map<Term, std::vector<std::size_t>> incident_;
};

/// Refines `colors` until the partition stops splitting.
Coloring refine(const BlankGraph& graph, Coloring colors);

}  // namespace rbkit::rdf::detail
