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

#include "rbkit/rdf/iri.hpp"

#include <cctype>
#include <utility>

#include "rbkit/error.hpp"

namespace rbkit::rdf {

namespace {

struct IriParts {
  std::optional<std::string_view> scheme;
  std::optional<std::string_view> authority;
  std::string_view path;
  std::optional<std::string_view> query;
  std::optional<std::string_view> fragment;
};

// RFC 3986 appendix B, without the regex.
IriParts split(std::string_view ref) {
  IriParts parts;
  if (has_scheme(ref)) {
    const auto colon = ref.find(':');
    parts.scheme = ref.substr(0, colon);
    ref.remove_prefix(colon + 1);
  }
  if (const auto hash = ref.find('#'); hash != std::string_view::npos) {
    parts.fragment = ref.substr(hash + 1);
    ref = ref.substr(0, hash);
  }
  if (const auto q = ref.find('?'); q != std::string_view::npos) {
    parts.query = ref.substr(q + 1);
    ref = ref.substr(0, q);
  }
  if (ref.starts_with("//")) {
    ref.remove_prefix(2);
    const auto slash = ref.find('/');
    parts.authority = ref.substr(0, slash);
    ref = slash == std::string_view::npos ? std::string_view{} : ref.substr(slash);
  }
  parts.path = ref;
  return parts;
}

std::string remove_dot_segments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.erase(0, 3);
    } else if (in.starts_with("./")) {
      in.erase(0, 2);
    } else if (in.starts_with("/./")) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in.size() == 3 ? std::string("/") : in.substr(3);
      const auto last = out.rfind('/');
      out.erase(last == std::string::npos ? 0 : last);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      const auto next = in.find('/', in[0] == '/' ? 1 : 0);
      out += in.substr(0, next);
      in.erase(0, next);
    }
  }
  return out;
}

std::string merge(const IriParts& base, std::string_view refPath) {
  if (base.authority && base.path.empty()) return "/" + std::string(refPath);
  const auto slash = base.path.rfind('/');
  if (slash == std::string_view::npos) return std::string(refPath);
  return std::string(base.path.substr(0, slash + 1)) + std::string(refPath);
}

std::string recompose(std::string_view scheme, const std::optional<std::string>& authority,
                      const std::string& path, const std::optional<std::string_view>& query,
                      const std::optional<std::string_view>& fragment) {
  std::string out(scheme);
  out += ':';
  if (authority) {
    out += "//";
    out += *authority;
  }
  out += path;
  if (query) {
    out += '?';
    out += *query;
  }
  if (fragment) {
    out += '#';
    out += *fragment;
  }
  return out;
}

}  // namespace

bool has_scheme(std::string_view text) noexcept {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

std::string resolve_iri(std::string_view base, std::string_view reference) {
  const IriParts r = split(reference);
  const IriParts b = split(base);
  if (!b.scheme) throw RelativeIriError(std::string(base));

  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string_view> query;
  std::string_view scheme;

  if (r.scheme) {
    scheme = *r.scheme;
    if (r.authority) authority = std::string(*r.authority);
    path = remove_dot_segments(r.path);
    query = r.query;
  } else {
    scheme = *b.scheme;
    if (r.authority) {
      authority = std::string(*r.authority);
      path = remove_dot_segments(r.path);
      query = r.query;
    } else {
      if (b.authority) authority = std::string(*b.authority);
      if (r.path.empty()) {
        path = std::string(b.path);
        query = r.query ? r.query : b.query;
      } else {
        path = r.path.front() == '/' ? remove_dot_segments(r.path)
                                     : remove_dot_segments(merge(b, r.path));
        query = r.query;
      }
    }
  }
  return recompose(scheme, authority, path, query, r.fragment);
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!has_scheme(value_)) throw RelativeIriError(value_);
}

std::optional<Iri> Iri::try_parse(std::string value) {
  if (!has_scheme(value)) return std::nullopt;
  return Iri(std::move(value), Unchecked{});
}

}  // namespace rbkit::rdf
