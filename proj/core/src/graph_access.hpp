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

// Typed single-value readers over a default-graph description, raising the
// registry's MissingFieldError / TypeMismatchError with the given field name.

#include <cstdint>
#include <optional>
#include <string>

#include "rbkit/error.hpp"
#include "rbkit/rdf/dataset.hpp"

namespace rbkit::detail {

inline std::optional<rdf::Term> single_value(const rdf::Dataset& g, const rdf::Term& s,
                                             const rdf::Term& p, const std::string& field) {
  auto values = g.objects(s, p);
  if (values.empty()) return std::nullopt;
  if (values.size() > 1) throw TypeMismatchError(field, "expected one value, found " +
                                                            std::to_string(values.size()));
  return std::move(values.front());
}

inline rdf::Term required_value(const rdf::Dataset& g, const rdf::Term& s, const rdf::Term& p,
                                const std::string& field) {
  auto v = single_value(g, s, p, field);
  if (!v) throw MissingFieldError(field);
  return std::move(*v);
}

inline std::string literal_text(const rdf::Term& t, const std::string& field) {
  if (!t.is_literal()) throw TypeMismatchError(field, "expected a literal, found " + t.nt());
  return t.value();
}

inline rdf::Iri iri_value(const rdf::Term& t, const std::string& field) {
  if (!t.is_iri()) throw TypeMismatchError(field, "expected an IRI, found " + t.nt());
  return rdf::Iri(t.value());
}

inline std::uint64_t count_value(const rdf::Term& t, const std::string& field) {
  const auto n = t.as_integer();
  if (!n) throw TypeMismatchError(field, "expected an xsd:integer, found " + t.nt());
  if (*n < 0) throw TypeMismatchError(field, "expected a non-negative integer");
  return static_cast<std::uint64_t>(*n);
}

inline bool boolean_value(const rdf::Term& t, const std::string& field) {
  if (t.is_literal() && t.datatype() == rdf::xsd::boolean) {
    if (t.value() == "true" || t.value() == "1") return true;
    if (t.value() == "false" || t.value() == "0") return false;
  }
  throw TypeMismatchError(field, "expected an xsd:boolean, found " + t.nt());
}

inline std::string required_literal(const rdf::Dataset& g, const rdf::Term& s,
                                    const rdf::Term& p, const std::string& field) {
  return literal_text(required_value(g, s, p, field), field);
}

inline std::optional<std::string> optional_literal(const rdf::Dataset& g, const rdf::Term& s,
                                                   const rdf::Term& p, const std::string& field) {
  auto v = single_value(g, s, p, field);
  if (!v) return std::nullopt;
  return literal_text(*v, field);
}

inline rdf::Iri required_iri(const rdf::Dataset& g, const rdf::Term& s, const rdf::Term& p,
                             const std::string& field) {
  return iri_value(required_value(g, s, p, field), field);
}

inline std::optional<rdf::Iri> optional_iri(const rdf::Dataset& g, const rdf::Term& s,
                                            const rdf::Term& p, const std::string& field) {
  auto v = single_value(g, s, p, field);
  if (!v) return std::nullopt;
  return iri_value(*v, field);
}

inline std::uint64_t required_count(const rdf::Dataset& g, const rdf::Term& s,
                                    const rdf::Term& p, const std::string& field) {
  return count_value(required_value(g, s, p, field), field);
}

}  // namespace rbkit::detail
