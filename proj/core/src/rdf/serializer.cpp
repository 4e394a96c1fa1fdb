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

#include "rbkit/rdf/serializer.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>
#include <utility>
#include <vector>

#include "rbkit/error.hpp"
#include "refine.hpp"

namespace rbkit::rdf {

namespace {

Term color_key(const Term& t, const detail::Coloring& colors) {
  if (!t.is_blank()) return t;
  char buf[24];
  std::snprintf(buf, sizeof buf, "c%016llx", static_cast<unsigned long long>(colors.at(t)));
  return Term::blank(buf);
}

Quad keyed(const Quad& q, const detail::Coloring& colors) {
  return Quad{color_key(q.subject, colors), q.predicate, color_key(q.object, colors),
              q.graph ? std::optional<Term>(color_key(*q.graph, colors)) : std::nullopt};
}

bool is_simple_local(const std::string& local) {
  static const std::regex pattern("^([A-Za-z0-9_]([A-Za-z0-9_.-]*[A-Za-z0-9_-])?)?$");
  return std::regex_match(local, pattern);
}

bool is_prefix_name(const std::string& name) {
  static const std::regex pattern("^([A-Za-z]([A-Za-z0-9_.-]*[A-Za-z0-9_-])?)?$");
  return std::regex_match(name, pattern);
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Dataset& dataset) {
    for (const auto& [name, iri] : dataset.prefixes()) {
      if (is_prefix_name(name)) prefixes_.emplace_back(name, iri);
    }
  }

  std::string write(const Dataset& relabeled) {
    for (const auto& [name, iri] : prefixes_) {
      out_ += "@prefix " + name + ": <" + escape_iri(iri) + "> .\n";
    }
    bool firstBlock = prefixes_.empty();

    auto it = relabeled.begin();
    while (it != relabeled.end()) {
      const std::optional<Term> graph = it->graph;
      auto end = it;
      while (end != relabeled.end() && end->graph == graph) ++end;
      if (!firstBlock) out_ += "\n";
      firstBlock = false;
      if (graph) {
        out_ += term(*graph) + " {\n";
        write_subjects(it, end, "    ");
        out_ += "}\n";
      } else {
        write_subjects(it, end, "");
      }
      it = end;
    }
    return std::move(out_);
  }

 private:
  void write_subjects(Dataset::const_iterator it, Dataset::const_iterator end,
                      const std::string& indent) {
    bool firstSubject = true;
    while (it != end) {
      const Term subject = it->subject;
      if (!firstSubject) out_ += "\n";
      firstSubject = false;
      out_ += indent + term(subject);
      bool firstPredicate = true;
      while (it != end && it->subject == subject) {
        const Term predicate = it->predicate;
        out_ += firstPredicate ? " " : " ;\n" + indent + "    ";
        firstPredicate = false;
        out_ += predicate.value() == rdfns::type ? std::string("a") : term(predicate);
        bool firstObject = true;
        while (it != end && it->subject == subject && it->predicate == predicate) {
          out_ += firstObject ? " " : ", ";
          firstObject = false;
          out_ += term(it->object);
          ++it;
        }
      }
      out_ += " .\n";
    }
  }

  std::string iri(const std::string& value) const {
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& p : prefixes_) {
      if (value.starts_with(p.second) && is_simple_local(value.substr(p.second.size())) &&
          (!best || p.second.size() > best->second.size())) {
        best = &p;
      }
    }
    if (best) return best->first + ":" + value.substr(best->second.size());
    return "<" + escape_iri(value) + ">";
  }

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Iri:
        return iri(t.value());
      case TermKind::BlankNode:
        return t.nt();
      case TermKind::Literal:
        return literal(t);
    }
    return {};
  }

  std::string literal(const Term& t) const {
    static const std::regex integer("^[+-]?[0-9]+$");
    static const std::regex decimal("^[+-]?[0-9]+\\.[0-9]+$");
    static const std::regex dbl("^[+-]?[0-9]+(\\.[0-9]+)?[eE][+-]?[0-9]+$");
    const std::string& dt = t.datatype();
    const std::string& lex = t.value();
    if (dt == xsd::integer && std::regex_match(lex, integer)) return lex;
    if (dt == xsd::decimal && std::regex_match(lex, decimal)) return lex;
    if (dt == xsd::double_ && std::regex_match(lex, dbl)) return lex;
    if (dt == xsd::boolean && (lex == "true" || lex == "false")) return lex;
    std::string out = "\"" + escape_string(lex) + "\"";
    if (!t.language().empty()) return out + "@" + t.language();
    if (dt != xsd::string) out += "^^" + iri(dt);
    return out;
  }

  std::vector<std::pair<std::string, std::string>> prefixes_;
  std::string out_;
};

}  // namespace

std::map<Term, Term> canonical_blank_labels(const Dataset& dataset, const std::string& prefix) {
  const detail::BlankGraph graph(dataset);
  std::map<Term, Term> labels;
  if (graph.size() == 0) return labels;
  const detail::Coloring colors = detail::refine(graph, graph.uniform_coloring());

  std::vector<std::pair<Quad, const Quad*>> order;
  for (const auto& q : dataset) {
    if (q.has_blank_nodes()) order.emplace_back(keyed(q, colors), &q);
  }
  std::ranges::sort(order, [](const auto& a, const auto& b) {
    if (auto c = canonical_quad_order(a.first, b.first); c != 0) return c < 0;
    return canonical_quad_order(*a.second, *b.second) < 0;
  });

  std::size_t next = 0;
  auto visit = [&](const Term& t) {
    if (t.is_blank() && !labels.contains(t)) {
      labels.emplace(t, Term::blank(prefix + std::to_string(next++)));
    }
  };
  for (const auto& [_, q] : order) {
    if (q->graph) visit(*q->graph);
    visit(q->subject);
    visit(q->object);
  }
  return labels;
}

Dataset canonicalize(const Dataset& dataset, const std::string& prefix) {
  const auto labels = canonical_blank_labels(dataset, prefix);
  if (labels.empty()) return dataset;
  return dataset.map_blank_nodes([&](const Term& t) { return labels.at(t); });
}

std::string serialize_document(const Dataset& dataset, Format format,
                               const SerializeOptions& options) {
  if (!supports_named_graphs(format) && dataset.has_named_graphs()) {
    throw FormatCapabilityError(std::string("named graphs cannot be written as ") +
                                std::string(name(format)));
  }
  const Dataset relabeled = canonicalize(dataset, options.blankPrefix);

  if (format == Format::NTriples || format == Format::NQuads) {
    std::string out;
    for (const auto& q : relabeled) {
      out += q.subject.nt();
      out += ' ';
      out += q.predicate.nt();
      out += ' ';
      out += q.object.nt();
      if (q.graph) {
        out += ' ';
        out += q.graph->nt();
      }
      out += " .\n";
    }
    return out;
  }
  return TurtleWriter(dataset).write(relabeled);
}

}  // namespace rbkit::rdf
