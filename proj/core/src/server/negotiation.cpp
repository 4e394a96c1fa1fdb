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

#include "rbkit/server/negotiation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace rbkit::server {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool token(std::string_view s) {
  static constexpr std::string_view kExtra = "!#$%&'*+-.^_`|~";
  return !s.empty() && std::ranges::all_of(s, [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || kExtra.find(c) != std::string_view::npos;
  });
}

// qvalue = ( "0" [ "." 0*3DIGIT ] ) / ( "1" [ "." 0*3("0") ] )
std::optional<double> parse_q(std::string_view v) {
  if (v.empty() || v.size() > 5 || (v[0] != '0' && v[0] != '1')) return std::nullopt;
  if (v.size() > 1 && v[1] != '.') return std::nullopt;
  const std::string_view frac = v.size() > 2 ? v.substr(2) : std::string_view();
  if (!std::ranges::all_of(frac, [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
  if (v[0] == '1') {
    if (!std::ranges::all_of(frac, [](char c) { return c == '0'; })) return std::nullopt;
    return 1.0;
  }
  int thousandths = 0;
  for (std::size_t i = 0; i < 3; ++i) thousandths = thousandths * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  return thousandths / 1000.0;
}

}  // namespace

int MediaRange::specificity() const noexcept {
  if (type == "*") return 0;
  return subtype == "*" ? 1 : 2;
}

bool MediaRange::matches(std::string_view mediaType) const noexcept {
  const auto slash = mediaType.find('/');
  if (slash == std::string_view::npos) return false;
  if (type == "*") return true;
  if (mediaType.substr(0, slash) != type) return false;
  return subtype == "*" || mediaType.substr(slash + 1) == subtype;
}

std::vector<MediaRange> parse_accept(std::string_view header) {
  std::vector<MediaRange> out;
  std::size_t start = 0;
  while (start <= header.size()) {
    auto end = header.find(',', start);
    if (end == std::string_view::npos) end = header.size();
    std::string_view item = trim(header.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;

    const auto semi = item.find(';');
    const std::string_view range = trim(item.substr(0, semi));
    const auto slash = range.find('/');
    if (slash == std::string_view::npos) continue;
    MediaRange r{lower(trim(range.substr(0, slash))), lower(trim(range.substr(slash + 1))), 1.0};
    if (!token(r.type) || !token(r.subtype) || (r.type == "*" && r.subtype != "*")) continue;

    bool valid = true;
    std::string_view params = semi == std::string_view::npos ? std::string_view() : item.substr(semi + 1);
    while (!params.empty() && valid) {
      const auto next = params.find(';');
      const std::string_view p = trim(params.substr(0, next));
      params = next == std::string_view::npos ? std::string_view() : params.substr(next + 1);
      const auto eq = p.find('=');
      if (eq == std::string_view::npos) {
        valid = p.empty();
        continue;
      }
      if (lower(trim(p.substr(0, eq))) == "q") {
        const auto q = parse_q(trim(p.substr(eq + 1)));
        if (q) r.q = *q;
        else valid = false;
        break;  // anything after q is an accept-extension
      }
    }
    if (valid) out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::string> choose_media_type(std::optional<std::string_view> accept,
                                             const std::vector<std::string>& offered) {
  if (offered.empty()) return std::nullopt;
  if (!accept || trim(*accept).empty()) return offered.front();
  const auto ranges = parse_accept(*accept);
  if (ranges.empty()) return offered.front();

  std::optional<std::string> best;
  double bestQ = 0;
  int bestSpec = -1;
  for (const auto& type : offered) {
    const MediaRange* match = nullptr;
    for (const auto& r : ranges) {
      if (!r.matches(type)) continue;
      if (!match || r.specificity() > match->specificity()) match = &r;
    }
    if (!match || match->q <= 0) continue;
    if (match->q > bestQ || (match->q == bestQ && match->specificity() > bestSpec)) {
      best = type;
      bestQ = match->q;
      bestSpec = match->specificity();
    }
  }
  return best;
}

}  // namespace rbkit::server
