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

#include "rbkit/rdf/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "rbkit/error.hpp"

namespace rbkit::rdf {

namespace {

std::string hex_escape(unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
  return buf;
}

std::string make_nt(TermKind kind, const std::string& value, const std::string& datatype,
                    const std::string& language) {
  switch (kind) {
    case TermKind::Iri:
      return "<" + escape_iri(value) + ">";
    case TermKind::BlankNode:
      return "_:" + value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(value) + "\"";
      if (!language.empty()) {
        out += "@" + language;
      } else if (datatype != xsd::string) {
        out += "^^<" + escape_iri(datatype) + ">";
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          out += hex_escape(c);
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string escape_iri(std::string_view iri) {
  std::string out;
  out.reserve(iri.size());
  for (const char ch : iri) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' || ch == '}' ||
        ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
      out += hex_escape(c);
    } else {
      out += ch;
    }
  }
  return out;
}

Term::Term(TermKind kind, std::string value, std::string datatype, std::string language)
    : kind_(kind),
      value_(std::move(value)),
      datatype_(std::move(datatype)),
      language_(std::move(language)),
      nt_(make_nt(kind_, value_, datatype_, language_)) {}

Term Term::iri(std::string value) {
  if (!has_scheme(value)) throw RelativeIriError(value);
  return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) throw Error("blank node label must not be empty");
  return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype == rdfns::langString) {
    throw Error("language-tagged literal requires a language tag");
  }
  if (!has_scheme(datatype)) throw RelativeIriError(datatype);
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype), {});
}

Term Term::lang_literal(std::string lexical, std::string language) {
  if (language.empty()) throw Error("empty language tag");
  std::ranges::transform(language, language.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return Term(TermKind::Literal, std::move(lexical), rdfns::langString, std::move(language));
}

Term Term::integer(std::int64_t value) { return literal(std::to_string(value), xsd::integer); }

Term Term::boolean(bool value) { return literal(value ? "true" : "false", xsd::boolean); }

std::optional<std::int64_t> Term::as_integer() const {
  if (!is_literal()) return std::nullopt;
  if (datatype_ != xsd::integer && datatype_ != xsd::nonNegativeInteger) return std::nullopt;
  std::string_view text = value_;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return out;
}

}  // namespace rbkit::rdf
