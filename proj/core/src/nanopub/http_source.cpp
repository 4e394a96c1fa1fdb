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

#include <httplib.h>

#include <sstream>

#include "rbkit/error.hpp"
#include "rbkit/nanopub/discovery.hpp"
#include "rbkit/rdf/iri.hpp"

namespace rbkit::nanopub {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // path and query
};

SplitUrl split_url(const std::string& url) {
  const auto schemeEnd = url.find("://");
  if (schemeEnd == std::string::npos) throw SourceUnavailableError("not an absolute URL: " + url);
  const auto pathStart = url.find('/', schemeEnd + 3);
  if (pathStart == std::string::npos) return {url, "/"};
  std::string target = url.substr(pathStart);
  if (const auto hash = target.find('#'); hash != std::string::npos) target.erase(hash);
  return {url.substr(0, pathStart), target};
}

httplib::Result get(const std::string& url, const char* accept, const HttpOptions& options) {
  const SplitUrl u = split_url(url);
  httplib::Client client(u.origin);
  if (!client.is_valid()) throw SourceUnavailableError("unsupported URL: " + url);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_follow_location(true);
  return client.Get(u.target, httplib::Headers{{"Accept", accept}});
}

}  // namespace

HttpIndexSource::HttpIndexSource(std::string indexUrl, HttpOptions options)
    : indexUrl_(std::move(indexUrl)), options_(options) {}

std::vector<std::string> HttpIndexSource::list() {
  auto res = get(indexUrl_, "text/plain", options_);
  if (!res) {
    throw SourceUnavailableError("cannot reach " + indexUrl_ + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw SourceUnavailableError(indexUrl_ + " answered HTTP " + std::to_string(res->status));
  }
  std::vector<std::string> out;
  std::istringstream lines(res->body);
  for (std::string line; std::getline(lines, line);) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(rdf::resolve_iri(indexUrl_, line.substr(b, e - b + 1)));
  }
  return out;
}

FetchedDocument HttpIndexSource::fetch(const std::string& iri) {
  auto res = get(iri, "application/trig", options_);
  if (!res) throw SourceUnavailableError("cannot fetch " + iri + ": " + httplib::to_string(res.error()));
  if (res->status != 200) throw SourceUnavailableError(iri + " answered HTTP " + std::to_string(res->status));
  const auto format = rdf::format_from_media_type(res->get_header_value("Content-Type"));
  return {std::move(res->body), format.value_or(rdf::Format::TriG)};
}

}  // namespace rbkit::nanopub
