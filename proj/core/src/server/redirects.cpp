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

#include "rbkit/server/redirects.hpp"

#include <map>
#include <set>

#include "rbkit/error.hpp"

namespace rbkit::server {

namespace {

bool is_placeholder(std::string_view s) {
  if (s.size() < 3 || s.front() != '{' || s.back() != '}') return false;
  for (const char c : s.substr(1, s.size() - 2)) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < path.size()) {
    auto end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    if (end > start) out.emplace_back(path.substr(start, end - start));
    else if (start != 0 && end != path.size()) out.emplace_back();  // "//" keeps an empty segment
    start = end + 1;
  }
  return out;
}

std::vector<RedirectTable::Segment> RedirectTable::compile(std::string_view path) {
  if (path.empty() || path.front() != '/') throw SnapshotFormatError("path must start with '/': " + std::string(path));
  std::vector<Segment> out;
  for (auto& s : split_path(path)) {
    if (s.empty()) throw SnapshotFormatError("empty segment in " + std::string(path));
    const bool ph = is_placeholder(s);
    if (!ph && s.find_first_of("{}") != std::string::npos) {
      throw SnapshotFormatError("bad placeholder in " + std::string(path));
    }
    out.push_back({ph ? s.substr(1, s.size() - 2) : s, ph});
  }
  return out;
}

bool RedirectTable::overlap(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].placeholder && !b[i].placeholder && a[i].text != b[i].text) return false;
  }
  return true;
}

RedirectTable::RedirectTable(std::vector<RedirectRule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    Compiled c{compile(r.pattern), {}};
    std::set<std::string> names;
    for (const auto& s : c.pattern) {
      if (s.placeholder && !names.insert(s.text).second) {
        throw SnapshotFormatError("placeholder {" + s.text + "} used twice in " + r.pattern);
      }
    }
    // Targets keep placeholders inside segments ("{report}.md"), so they are
    // substituted textually rather than per segment.
    std::string_view t = r.target;
    if (t.empty() || t.front() != '/') throw SnapshotFormatError("target must start with '/': " + r.target);
    for (std::size_t open = t.find('{'); open != std::string_view::npos; open = t.find('{', open + 1)) {
      const auto close = t.find('}', open);
      if (close == std::string_view::npos) throw SnapshotFormatError("unclosed placeholder in " + r.target);
      const std::string name(t.substr(open + 1, close - open - 1));
      if (!names.contains(name)) {
        throw SnapshotFormatError("target uses undefined placeholder {" + name + "}: " + r.target);
      }
    }
    for (std::size_t i = 0; i < compiled_.size(); ++i) {
      if (overlap(compiled_[i].pattern, c.pattern)) {
        throw SnapshotFormatError("patterns overlap: " + rules_[i].pattern + " and " + r.pattern);
      }
    }
    compiled_.push_back(std::move(c));
  }
}

RedirectTable RedirectTable::parse(std::string_view text) {
  std::vector<RedirectRule> rules;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw SnapshotFormatError("redirects.conf:" + std::to_string(lineNo) + ": expected 'pattern -> target'");
    }
    rules.push_back({std::string(trim(line.substr(0, arrow))), std::string(trim(line.substr(arrow + 2)))});
    try {
      compile(rules.back().pattern);
    } catch (const SnapshotFormatError& e) {
      throw SnapshotFormatError("redirects.conf:" + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return RedirectTable(std::move(rules));
}

std::vector<std::size_t> RedirectTable::matching_rules(std::string_view path) const {
  std::vector<std::size_t> out;
  const auto segs = split_path(path);
  for (std::size_t i = 0; i < compiled_.size(); ++i) {
    const auto& p = compiled_[i].pattern;
    if (p.size() != segs.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k) {
      ok = p[k].placeholder ? !segs[k].empty() : p[k].text == segs[k];
    }
    if (ok) out.push_back(i);
  }
  return out;
}

std::optional<std::string> RedirectTable::try_resolve(std::string_view path,
                                                      std::string_view currentVersion) const {
  if (path.empty() || path.front() != '/') return std::nullopt;
  const auto segs = split_path(path);
  for (const std::size_t i : matching_rules(path)) {
    std::map<std::string, std::string, std::less<>> values;
    bool ok = true;
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const auto& s = compiled_[i].pattern[k];
      if (!s.placeholder) continue;
      std::string value = segs[k];
      if (value == "." || value == ".." || value.find_first_of("{}") != std::string::npos) ok = false;
      if (s.text == "version") {
        if (value == "dev") value = std::string(currentVersion);
        else if (value != currentVersion) ok = false;
      }
      values[s.text] = std::move(value);
    }
    if (!ok) return std::nullopt;
    std::string out;
    const std::string& t = rules_[i].target;
    for (std::size_t pos = 0; pos < t.size();) {
      if (t[pos] == '{') {
        const auto close = t.find('}', pos);
        out += values.find(std::string_view(t).substr(pos + 1, close - pos - 1))->second;
        pos = close + 1;
      } else {
        out += t[pos++];
      }
    }
    return out;
  }
  return std::nullopt;
}

std::string RedirectTable::resolve(std::string_view path, std::string_view currentVersion) const {
  if (auto target = try_resolve(path, currentVersion)) return *target;
  throw NotFoundError("no resource at " + std::string(path));
}

}  // namespace rbkit::server
