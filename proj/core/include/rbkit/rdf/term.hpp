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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rbkit/rdf/iri.hpp"

namespace rbkit::rdf {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

namespace xsd {
inline const std::string string = "http://www.w3.org/2001/XMLSchema#string";
inline const std::string integer = "http://www.w3.org/2001/XMLSchema#integer";
inline const std::string decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline const std::string double_ = "http://www.w3.org/2001/XMLSchema#double";
inline const std::string boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline const std::string date = "http://www.w3.org/2001/XMLSchema#date";
inline const std::string dateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
inline const std::string nonNegativeInteger =
    "http://www.w3.org/2001/XMLSchema#nonNegativeInteger";
}  // namespace xsd

namespace rdfns {
inline const std::string type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline const std::string rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline const std::string nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline const std::string langString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdfns

/// Kind rank used by the canonical order: IRIs sort before blank nodes, which
/// sort before literals.
enum class TermKind : std::uint8_t { Iri = 0, BlankNode = 1, Literal = 2 };

/// An RDF term. Immutable; the N-Triples form is computed once at
/// construction and doubles as the comparison key.
class Term {
 public:
  static Term iri(std::string value);
  static Term iri(const Iri& value) { return iri(value.str()); }
  static Term blank(std::string label);
  /// Typed literal. A language-tagged literal must go through lang_literal.
  static Term literal(std::string lexical, std::string datatype = xsd::string);
  static Term lang_literal(std::string lexical, std::string language);
  static Term integer(std::int64_t value);
  static Term boolean(bool value);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::BlankNode; }
  bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

  /// IRI string, blank-node label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  /// Empty unless a literal.
  const std::string& datatype() const noexcept { return datatype_; }
  /// Lower-cased BCP-47 tag; empty when absent.
  const std::string& language() const noexcept { return language_; }

  /// N-Triples / N-Quads lexical form.
  const std::string& nt() const noexcept { return nt_; }

  std::optional<std::int64_t> as_integer() const;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.kind_ == b.kind_ && a.nt_ == b.nt_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.nt_.compare(b.nt_) <=> 0;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language);

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string nt_;
};

/// Escapes a string for use between double quotes in N-Triples/Turtle.
std::string escape_string(std::string_view text);

/// Escapes characters that may not appear raw inside an IRIREF.
std::string escape_iri(std::string_view iri);

}  // namespace rbkit::rdf
