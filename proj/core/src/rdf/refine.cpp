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

#include "refine.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rbkit::rdf::detail {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

BlankGraph::BlankGraph(const Dataset& dataset) {
  for (const auto& q : dataset) {
    if (!q.has_blank_nodes()) continue;
    const std::size_t index = quads_.size();
    quads_.push_back(&q);
    std::set<Term> inQuad;
    if (q.subject.is_blank()) inQuad.insert(q.subject);
    if (q.object.is_blank()) inQuad.insert(q.object);
    if (q.graph && q.graph->is_blank()) inQuad.insert(*q.graph);
    for (const auto& b : inQuad) incident_[b].push_back(index);
  }
  for (const auto& [node, _] : incident_) nodes_.push_back(node);
}

Coloring BlankGraph::uniform_coloring() const {
  Coloring out;
  for (const auto& n : nodes_) out.emplace(n, 0);
  return out;
}

Coloring BlankGraph::refine_once(const Coloring& colors) const {
  auto render = [&](const Term& t, const Term& self) -> std::string {
    if (!t.is_blank()) return t.nt();
    if (t == self) return "@";
    return "_" + std::to_string(colors.at(t));
  };
  Coloring out;
  std::vector<std::string> sigs;
  for (const auto& node : nodes_) {
    sigs.clear();
    for (const std::size_t index : incident_.at(node)) {
      const Quad& q = *quads_[index];
      std::string sig = render(q.subject, node);
      sig += ' ';
      sig += q.predicate.nt();
      sig += ' ';
      sig += render(q.object, node);
      sig += ' ';
      sig += q.graph ? render(*q.graph, node) : std::string("-");
      sigs.push_back(std::move(sig));
    }
    std::ranges::sort(sigs);
    std::uint64_t h = fnv1a(std::to_string(colors.at(node)));
    for (const auto& s : sigs) {
      h = fnv1a(s, h);
      h = fnv1a("\n", h);
    }
    out.emplace(node, h);
  }
  return out;
}

std::size_t BlankGraph::class_count(const Coloring& colors) {
  std::set<std::uint64_t> distinct;
  for (const auto& [_, c] : colors) distinct.insert(c);
  return distinct.size();
}

Coloring refine(const BlankGraph& graph, Coloring colors) {
  std::size_t classes = BlankGraph::class_count(colors);
  // Each productive round splits at least one class, so size()+1 rounds suffice.
  for (std::size_t round = 0; round <= graph.size(); ++round) {
    Coloring next = graph.refine_once(colors);
    const std::size_t nextClasses = BlankGraph::class_count(next);
    colors = std::move(next);
    if (nextClasses == classes) break;
    classes = nextClasses;
  }
  return colors;
}

}  // namespace rbkit::rdf::detail
