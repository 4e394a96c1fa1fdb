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

#include "rbkit/rdf/parser.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rbkit/error.hpp"

namespace rbkit::rdf {

namespace {

constexpr int kEof = -1;

// Generated labels carry a character no document label can contain, so they
// cannot collide while parsing; they are renamed once parsing is done.
constexpr char kGeneratedMark = '#';

bool is_pn_chars_base(std::uint32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= 0xC0 && c <= 0xD6) ||
         (c >= 0xD8 && c <= 0xF6) || (c >= 0xF8 && c <= 0x2FF) || (c >= 0x370 && c <= 0x37D) ||
         (c >= 0x37F && c <= 0x1FFF) || (c >= 0x200C && c <= 0x200D) ||
         (c >= 0x2070 && c <= 0x218F) || (c >= 0x2C00 && c <= 0x2FEF) ||
         (c >= 0x3001 && c <= 0xD7FF) || (c >= 0xF900 && c <= 0xFDCF) ||
         (c >= 0xFDF0 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0xEFFFF);
}

bool is_pn_chars_u(std::uint32_t c) { return is_pn_chars_base(c) || c == '_'; }

bool is_digit(std::uint32_t c) { return c >= '0' && c <= '9'; }

bool is_hex(std::uint32_t c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool is_pn_chars(std::uint32_t c) {
  return is_pn_chars_u(c) || c == '-' || is_digit(c) || c == 0xB7 ||
         (c >= 0x300 && c <= 0x36F) || (c >= 0x203F && c <= 0x2040);
}

bool is_alpha(std::uint32_t c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

bool is_local_escapable(std::uint32_t c) {
  switch (c) {
    case '_': case '~': case '.': case '-': case '!': case '$': case '&': case '\'':
    case '(': case ')': case '*': case '+': case ',': case ';': case '=': case '/':
    case '?': case '#': case '@': case '%':
      return true;
    default:
      return false;
  }
}

bool is_iri_forbidden(std::uint32_t c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
         c == '^' || c == '`' || c == '\\';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Length of the UTF-8 sequence starting with `lead`; input is pre-validated.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead < 0xE0) return 2;
  if (lead < 0xF0) return 3;
  return 4;
}

class Parser {
 public:
  Parser(std::string_view text, Format format, const std::optional<std::string>& base)
      : text_(text), format_(format), base_(base) {}

  Dataset run() {
    if (text_.starts_with("\xEF\xBB\xBF")) advance(3);
    switch (format_) {
      case Format::NTriples:
      case Format::NQuads:
        line_document();
        break;
      case Format::Turtle:
        turtle_document();
        break;
      case Format::TriG:
        trig_document();
        break;
    }
    return finish();
  }

 private:
  struct State {
    std::size_t pos;
    std::size_t line;
    std::size_t column;
  };

  // ---- cursor ----------------------------------------------------------

  bool eof() const { return pos_ >= text_.size(); }

  int peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : kEof;
  }

  std::uint32_t peek_cp() const {
    if (eof()) return 0;
    const auto lead = static_cast<unsigned char>(text_[pos_]);
    const auto len = utf8_length(lead);
    if (len == 1) return lead;
    std::uint32_t cp = lead & (0xFF >> (len + 1));
    for (std::size_t i = 1; i < len; ++i) {
      cp = (cp << 6) | (static_cast<unsigned char>(text_[pos_ + i]) & 0x3F);
    }
    return cp;
  }

  void advance(std::size_t bytes = 1) {
    for (std::size_t i = 0; i < bytes && pos_ < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[pos_++]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  // Consumes one code point and appends its bytes to `out`.
  void take_cp(std::string& out) {
    const auto len = utf8_length(static_cast<unsigned char>(text_[pos_]));
    out.append(text_.substr(pos_, len));
    advance(len);
  }

  State save() const { return {pos_, line_, column_}; }
  void restore(const State& s) {
    pos_ = s.pos;
    line_ = s.line;
    column_ = s.column;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError({line_, column_}, message);
  }

  [[noreturn]] void fail_at(const State& s, const std::string& message) const {
    throw SyntaxError({s.line, s.column}, message);
  }

  std::string describe_next() const {
    if (eof()) return "end of input";
    std::string out = "'";
    out.append(text_.substr(pos_, utf8_length(static_cast<unsigned char>(text_[pos_]))));
    return out + "'";
  }

  void expect(char c) {
    if (peek() != static_cast<unsigned char>(c)) {
      fail(std::string("expected '") + c + "', found " + describe_next());
    }
    advance();
  }

  bool line_mode() const { return format_ == Format::NTriples || format_ == Format::NQuads; }

  // Whitespace and comments. Line-oriented syntaxes keep newlines significant
  // unless `crossLines` is set.
  void skip_ws(bool crossLines = true) {
    while (!eof()) {
      const int c = peek();
      if (c == ' ' || c == '\t' || (crossLines && (c == '\n' || c == '\r'))) {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n' && peek() != '\r') advance();
      } else {
        break;
      }
    }
  }

  void skip_inline() { skip_ws(!line_mode()); }

  // Case-insensitive keyword followed by something that cannot continue a name.
  bool at_keyword(std::string_view word) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const int c = peek(i);
      if (c == kEof) return false;
      const auto lc = static_cast<char>((c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c);
      const auto lw = static_cast<char>((word[i] >= 'A' && word[i] <= 'Z') ? word[i] - 'A' + 'a'
                                                                           : word[i]);
      if (lc != lw) return false;
    }
    const int next = peek(word.size());
    if (next == kEof) return true;
    if (next == ':' || next == '.' || next == '-' || next == '_' || next >= 0x80) return false;
    return !is_alpha(static_cast<std::uint32_t>(next)) &&
           !is_digit(static_cast<std::uint32_t>(next));
  }

  // ---- terms -------------------------------------------------------------

  std::string resolve(std::string iri, const State& at) {
    if (has_scheme(iri)) return iri;
    if (!base_) throw RelativeIriError({at.line, at.column}, iri);
    return resolve_iri(*base_, iri);
  }

  std::uint32_t read_hex(std::size_t digits) {
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const int c = peek();
      if (c == kEof || !is_hex(static_cast<std::uint32_t>(c))) fail("invalid \\u escape");
      cp = cp * 16 + static_cast<std::uint32_t>(is_digit(static_cast<std::uint32_t>(c))
                                                    ? c - '0'
                                                    : (c | 0x20) - 'a' + 10);
      advance();
    }
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) fail("escape is not a Unicode scalar value");
    return cp;
  }

  // Parses "\uXXXX" or "\UXXXXXXXX"; the cursor is on the backslash.
  std::uint32_t read_uchar() {
    advance();
    const int kind = peek();
    if (kind == 'u') {
      advance();
      return read_hex(4);
    }
    if (kind == 'U') {
      advance();
      return read_hex(8);
    }
    fail("expected \\u or \\U escape");
  }

  std::string iriref() {
    const State start = save();
    expect('<');
    std::string out;
    while (true) {
      if (eof()) fail_at(start, "unterminated IRI");
      const int c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        const auto cp = read_uchar();
        if (is_iri_forbidden(cp)) fail("escaped character not allowed in an IRI");
        append_utf8(out, cp);
        continue;
      }
      if (is_iri_forbidden(peek_cp())) fail("character " + describe_next() + " not allowed in an IRI");
      take_cp(out);
    }
    return resolve(std::move(out), start);
  }

  std::string pn_prefix() {
    std::string out;
    if (eof() || !is_pn_chars_base(peek_cp())) return out;
    take_cp(out);
    State lastGood = save();
    std::size_t goodLen = out.size();
    while (!eof()) {
      const auto cp = peek_cp();
      if (cp == '.') {
        take_cp(out);
      } else if (is_pn_chars(cp)) {
        take_cp(out);
        lastGood = save();
        goodLen = out.size();
      } else {
        break;
      }
    }
    restore(lastGood);
    out.resize(goodLen);
    return out;
  }

  // Optional PN_LOCAL; returns the unescaped local part.
  std::string pn_local() {
    std::string out;
    bool first = true;
    State lastGood = save();
    std::size_t goodLen = 0;
    while (!eof()) {
      const auto cp = peek_cp();
      bool endOk = true;
      if (cp == '%') {
        if (!is_hex(static_cast<std::uint32_t>(peek(1))) ||
            !is_hex(static_cast<std::uint32_t>(peek(2)))) {
          fail("invalid percent escape in local name");
        }
        out.append(text_.substr(pos_, 3));
        advance(3);
      } else if (cp == '\\') {
        const int next = peek(1);
        if (next == kEof || !is_local_escapable(static_cast<std::uint32_t>(next))) {
          fail("invalid escape in local name");
        }
        out += static_cast<char>(next);
        advance(2);
      } else if (first ? (is_pn_chars_u(cp) || cp == ':' || is_digit(cp))
                       : (is_pn_chars(cp) || cp == ':')) {
        take_cp(out);
      } else if (!first && cp == '.') {
        take_cp(out);
        endOk = false;
      } else {
        break;
      }
      first = false;
      if (endOk) {
        lastGood = save();
        goodLen = out.size();
      }
    }
    restore(lastGood);
    out.resize(goodLen);
    return out;
  }

  std::string prefixed_name() {
    const State start = save();
    std::string prefix = pn_prefix();
    if (peek() != ':') fail_at(start, "expected a prefixed name, found " + describe_next());
    advance();
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail_at(start, "undefined prefix '" + prefix + ":'");
    return it->second + pn_local();
  }

  std::string iri() {
    if (peek() == '<') return iriref();
    if (line_mode()) fail("expected an IRI, found " + describe_next());
    return prefixed_name();
  }

  Term blank_label() {
    const State start = save();
    if (peek() != '_' || peek(1) != ':') fail("expected a blank node label");
    advance(2);
    std::string label;
    const auto first = peek_cp();
    if (eof() || !(is_pn_chars_u(first) || is_digit(first))) {
      fail_at(start, "invalid blank node label");
    }
    take_cp(label);
    State lastGood = save();
    std::size_t goodLen = label.size();
    while (!eof()) {
      const auto cp = peek_cp();
      if (cp == '.') {
        take_cp(label);
      } else if (is_pn_chars(cp)) {
        take_cp(label);
        lastGood = save();
        goodLen = label.size();
      } else {
        break;
      }
    }
    restore(lastGood);
    label.resize(goodLen);
    explicitLabels_.insert(label);
    return Term::blank(std::move(label));
  }

  Term fresh_blank() {
    return Term::blank(std::string(1, kGeneratedMark) + std::to_string(generated_++));
  }

  std::string string_body() {
    const State start = save();
    const int quote = peek();
    const bool isLong = peek(1) == quote && peek(2) == quote;
    if (isLong && line_mode()) fail("long string literals are not allowed here");
    if (line_mode() && quote != '"') fail("expected '\"'");
    advance(isLong ? 3 : 1);
    std::string out;
    while (true) {
      if (eof()) fail_at(start, "unterminated string literal");
      const int c = peek();
      if (c == quote) {
        if (!isLong) {
          advance();
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          // A long string may end with up to two extra quote characters.
          if (peek(3) != quote) {
            advance(3);
            break;
          }
        }
        out += static_cast<char>(c);
        advance();
        continue;
      }
      if (!isLong && (c == '\n' || c == '\r')) fail("line break in a short string literal");
      if (c == '\\') {
        const int e = peek(1);
        switch (e) {
          case 't': out += '\t'; advance(2); continue;
          case 'b': out += '\b'; advance(2); continue;
          case 'n': out += '\n'; advance(2); continue;
          case 'r': out += '\r'; advance(2); continue;
          case 'f': out += '\f'; advance(2); continue;
          case '"': out += '"'; advance(2); continue;
          case '\'': out += '\''; advance(2); continue;
          case '\\': out += '\\'; advance(2); continue;
          case 'u':
          case 'U':
            append_utf8(out, read_uchar());
            continue;
          default:
            fail("invalid string escape");
        }
      }
      take_cp(out);
    }
    return out;
  }

  std::string langtag() {
    expect('@');
    std::string tag;
    if (!is_alpha(static_cast<std::uint32_t>(peek()))) fail("invalid language tag");
    while (is_alpha(static_cast<std::uint32_t>(peek()))) {
      tag += static_cast<char>(peek());
      advance();
    }
    while (peek() == '-') {
      const int next = peek(1);
      if (next == kEof || !(is_alpha(static_cast<std::uint32_t>(next)) ||
                            is_digit(static_cast<std::uint32_t>(next)))) {
        fail("invalid language tag");
      }
      tag += '-';
      advance();
      while (is_alpha(static_cast<std::uint32_t>(peek())) ||
             is_digit(static_cast<std::uint32_t>(peek()))) {
        tag += static_cast<char>(peek());
        advance();
      }
    }
    return tag;
  }

  Term rdf_literal() {
    std::string lexical = string_body();
    if (peek() == '@') return Term::lang_literal(std::move(lexical), langtag());
    if (peek() == '^' && peek(1) == '^') {
      advance(2);
      return Term::literal(std::move(lexical), iri());
    }
    return Term::literal(std::move(lexical), xsd::string);
  }

  std::string digits() {
    std::string out;
    while (is_digit(static_cast<std::uint32_t>(peek()))) {
      out += static_cast<char>(peek());
      advance();
    }
    return out;
  }

  bool at_exponent() const {
    if (peek() != 'e' && peek() != 'E') return false;
    const int next = peek(1);
    if (next == '+' || next == '-') return is_digit(static_cast<std::uint32_t>(peek(2)));
    return is_digit(static_cast<std::uint32_t>(next));
  }

  std::string exponent() {
    std::string out(1, static_cast<char>(peek()));
    advance();
    if (peek() == '+' || peek() == '-') {
      out += static_cast<char>(peek());
      advance();
    }
    return out + digits();
  }

  Term numeric_literal() {
    std::string lexical;
    if (peek() == '+' || peek() == '-') {
      lexical += static_cast<char>(peek());
      advance();
    }
    const std::string whole = digits();
    lexical += whole;
    bool fraction = false;
    if (peek() == '.' && is_digit(static_cast<std::uint32_t>(peek(1)))) {
      advance();
      lexical += "." + digits();
      fraction = true;
    } else if (!whole.empty() && peek() == '.' && (peek(1) == 'e' || peek(1) == 'E')) {
      const State dot = save();
      advance();
      if (at_exponent()) {
        return Term::literal(lexical + "." + exponent(), xsd::double_);
      }
      restore(dot);
    }
    if (whole.empty() && !fraction) fail("invalid numeric literal");
    if (at_exponent()) return Term::literal(lexical + exponent(), xsd::double_);
    return Term::literal(std::move(lexical), fraction ? xsd::decimal : xsd::integer);
  }

  // ---- emission ----------------------------------------------------------

  void emit(const Term& s, const Term& p, const Term& o) {
    dataset_.add(Quad{s, p, o, graph_});
  }

  Dataset finish() {
    if (generated_ == 0) return std::move(dataset_);
    std::map<std::string, Term> rename;
    std::size_t next = 0;
    for (std::size_t i = 0; i < generated_; ++i) {
      std::string candidate;
      do {
        candidate = "g" + std::to_string(next++);
      } while (explicitLabels_.contains(candidate));
      rename.emplace(std::string(1, kGeneratedMark) + std::to_string(i), Term::blank(candidate));
    }
    return dataset_.map_blank_nodes([&](const Term& t) {
      const auto it = rename.find(t.value());
      return it == rename.end() ? t : it->second;
    });
  }

  // ---- N-Triples / N-Quads -----------------------------------------------

  Term line_subject_or_graph() {
    if (peek() == '<') return Term::iri(iriref());
    if (peek() == '_') return blank_label();
    fail("expected an IRI or blank node, found " + describe_next());
  }

  void line_document() {
    while (true) {
      skip_ws(true);
      if (eof()) break;
      const Term subject = line_subject_or_graph();
      skip_inline();
      const Term predicate = Term::iri(iriref());
      skip_inline();
      Term object = peek() == '"' ? rdf_literal() : line_subject_or_graph();
      skip_inline();
      std::optional<Term> graph;
      if (format_ == Format::NQuads && peek() != '.') {
        graph = line_subject_or_graph();
        skip_inline();
      }
      expect('.');
      skip_inline();
      if (!eof() && peek() != '\n' && peek() != '\r') {
        fail("expected end of line after statement, found " + describe_next());
      }
      dataset_.add(Quad{subject, predicate, std::move(object), std::move(graph)});
    }
  }

  // ---- Turtle / TriG -----------------------------------------------------

  bool directive() {
    if (peek() == '@') {
      const State start = save();
      advance();
      if (text_.substr(pos_).starts_with("prefix")) {
        advance(6);
        prefix_body();
      } else if (text_.substr(pos_).starts_with("base")) {
        advance(4);
        base_body();
      } else {
        fail_at(start, "unknown directive");
      }
      skip_ws();
      expect('.');
      return true;
    }
    if (at_keyword("PREFIX")) {
      advance(6);
      prefix_body();
      return true;
    }
    if (at_keyword("BASE")) {
      advance(4);
      base_body();
      return true;
    }
    return false;
  }

  void prefix_body() {
    skip_ws();
    const State start = save();
    std::string prefix = pn_prefix();
    if (peek() != ':') fail_at(start, "expected a prefix name ending in ':'");
    advance();
    skip_ws();
    std::string iri = iriref();
    dataset_.set_prefix(prefix, iri);
    prefixes_[std::move(prefix)] = std::move(iri);
  }

  void base_body() {
    skip_ws();
    base_ = iriref();
  }

  bool at_verb_start() const {
    const int c = peek();
    return c != kEof && c != '.' && c != ']' && c != '}' && c != ';';
  }

  Term verb() {
    if (peek() == 'a') {
      const int next = peek(1);
      const bool nameContinues =
          next != kEof && (next == ':' || next == '.' ||
                           is_pn_chars(next < 0x80 ? static_cast<std::uint32_t>(next) : 0x100));
      if (!nameContinues) {
        advance();
        return Term::iri(rdfns::type);
      }
    }
    return Term::iri(iri());
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      const Term predicate = verb();
      skip_ws();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        advance();
        skip_ws();
      }
      if (!at_verb_start()) return;
    }
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      emit(subject, predicate, object());
      skip_ws();
      if (peek() != ',') return;
      advance();
      skip_ws();
    }
  }

  Term blank_node_property_list_after_open() {
    const Term node = fresh_blank();
    predicate_object_list(node);
    skip_ws();
    expect(']');
    return node;
  }

  // '[' has not been consumed. Handles both ANON and property lists.
  Term bracket_node() {
    expect('[');
    skip_ws();
    if (peek() == ']') {
      advance();
      return fresh_blank();
    }
    return blank_node_property_list_after_open();
  }

  Term collection() {
    expect('(');
    skip_ws();
    std::vector<Term> items;
    while (peek() != ')') {
      if (eof()) fail("unterminated collection");
      items.push_back(object());
      skip_ws();
    }
    advance();
    if (items.empty()) return Term::iri(rdfns::nil);
    const Term first = Term::iri(rdfns::first);
    const Term rest = Term::iri(rdfns::rest);
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cells[i], first, items[i]);
      emit(cells[i], rest, i + 1 < items.size() ? cells[i + 1] : Term::iri(rdfns::nil));
    }
    return cells.front();
  }

  bool at_boolean(std::string_view word) const {
    if (!text_.substr(pos_).starts_with(word)) return false;
    const int next = peek(word.size());
    if (next == kEof) return true;
    if (next == ':' || next == '.' ) {
      // "true." ends a statement; "true:" is a prefixed name.
      return next == '.' && !is_pn_chars(static_cast<std::uint32_t>(peek(word.size() + 1)));
    }
    return !is_pn_chars(next < 0x80 ? static_cast<std::uint32_t>(next) : 0x100);
  }

  Term object() {
    const int c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return bracket_node();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return rdf_literal();
    if (c == '+' || c == '-' || c == '.' || is_digit(static_cast<std::uint32_t>(c))) {
      return numeric_literal();
    }
    if (at_boolean("true")) {
      advance(4);
      return Term::boolean(true);
    }
    if (at_boolean("false")) {
      advance(5);
      return Term::boolean(false);
    }
    if (c == kEof) fail("unexpected end of input, expected an object");
    return Term::iri(prefixed_name());
  }

  Term subject() {
    const int c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == kEof) fail("unexpected end of input, expected a subject");
    if (c == '"' || c == '\'' || is_digit(static_cast<std::uint32_t>(c))) {
      fail("literal in subject position");
    }
    return Term::iri(prefixed_name());
  }

  // Statement body inside Turtle or a TriG block; terminator handled by caller.
  void triples() {
    if (peek() == '[') {
      expect('[');
      skip_ws();
      if (peek() == ']') {
        advance();
        skip_ws();
        predicate_object_list(fresh_blank());
        return;
      }
      const Term node = blank_node_property_list_after_open();
      skip_ws();
      if (at_verb_start()) predicate_object_list(node);
      return;
    }
    const Term s = subject();
    skip_ws();
    predicate_object_list(s);
  }

  void turtle_document() {
    while (true) {
      skip_ws();
      if (eof()) break;
      if (directive()) continue;
      triples();
      skip_ws();
      expect('.');
    }
  }

  void wrapped_graph(const std::optional<Term>& name) {
    expect('{');
    graph_ = name;
    while (true) {
      skip_ws();
      if (peek() == '}') break;
      if (eof()) fail("unterminated graph block");
      triples();
      skip_ws();
      if (peek() == '.') {
        advance();
        continue;
      }
      if (peek() != '}') fail("expected '.' or '}', found " + describe_next());
    }
    advance();
    graph_.reset();
  }

  Term graph_label() {
    if (peek() == '<') return Term::iri(iriref());
    if (peek() == '_' && peek(1) == ':') return blank_label();
    if (peek() == '[') {
      const State start = save();
      advance();
      skip_ws();
      if (peek() != ']') fail_at(start, "graph label must be an IRI or blank node");
      advance();
      return fresh_blank();
    }
    return Term::iri(prefixed_name());
  }

  void trig_document() {
    while (true) {
      skip_ws();
      if (eof()) break;
      if (directive()) continue;
      if (peek() == '{') {
        wrapped_graph(std::nullopt);
        continue;
      }
      if (at_keyword("GRAPH")) {
        advance(5);
        skip_ws();
        const Term label = graph_label();
        skip_ws();
        wrapped_graph(label);
        continue;
      }
      if (peek() == '[') {
        advance();
        skip_ws();
        if (peek() == ']') {
          advance();
          const Term node = fresh_blank();
          skip_ws();
          if (peek() == '{') {
            wrapped_graph(node);
            continue;
          }
          predicate_object_list(node);
        } else {
          const Term node = blank_node_property_list_after_open();
          skip_ws();
          if (at_verb_start()) predicate_object_list(node);
        }
        skip_ws();
        expect('.');
        continue;
      }
      if (peek() == '(') {
        const Term head = collection();
        skip_ws();
        predicate_object_list(head);
        skip_ws();
        expect('.');
        continue;
      }
      const Term label = subject();
      skip_ws();
      if (peek() == '{') {
        wrapped_graph(label);
        continue;
      }
      predicate_object_list(label);
      skip_ws();
      expect('.');
    }
  }

  std::string_view text_;
  Format format_;
  std::optional<std::string> base_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;

  std::map<std::string, std::string> prefixes_;
  std::optional<Term> graph_;
  Dataset dataset_;
  std::set<std::string> explicitLabels_;
  std::size_t generated_ = 0;
};

}  // namespace

void validate_utf8(std::string_view bytes) {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto bad = [&](const char* what) { throw EncodingError({line, column}, what); };
  while (i < bytes.size()) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
    } else {
      bad("invalid UTF-8 lead byte");
    }
    if (i + len > bytes.size()) bad("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) bad("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10FFFF))) {
      bad("overlong or out-of-range UTF-8 sequence");
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) bad("UTF-8 encoded surrogate");
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    i += len;
  }
}

Dataset parse_document(std::string_view bytes, Format format,
                       const std::optional<std::string>& base) {
  validate_utf8(bytes);
  if (base && !has_scheme(*base)) throw RelativeIriError(*base);
  return Parser(bytes, format, base).run();
}

}  // namespace rbkit::rdf
