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

#include "rbkit/server/http.hpp"

#include <httplib.h>

#include <cstdlib>

#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/serializer.hpp"
#include "rbkit/server/negotiation.hpp"

namespace fs = std::filesystem;

namespace rbkit::server {

namespace {

constexpr std::string_view kHtml = "text/html";

std::optional<rdf::Format> rdf_format(std::string_view mediaType) {
  for (const auto f : rdf::kAllFormats) {
    if (rdf::media_type(f) == mediaType) return f;
  }
  return std::nullopt;
}

Response plain(int status, std::string body) {
  return {status, "text/plain; charset=utf-8", std::move(body), {}};
}

std::string static_content_type(const fs::path& p) {
  const auto ext = p.extension().string();
  if (ext == ".md") return "text/markdown; charset=utf-8";
  if (ext == ".json") return "application/json";
  if (ext == ".conf" || ext == ".txt") return "text/plain; charset=utf-8";
  if (const auto f = rdf::format_from_extension(p)) return std::string(rdf::media_type(*f));
  return "application/octet-stream";
}

Response serve_static(const Snapshot& snapshot, std::string_view path) {
  const auto segments = split_path(path);
  for (const auto& s : segments) {
    if (s.empty() || s == "." || s == ".." || s.find('\\') != std::string::npos ||
        s.find('\0') != std::string::npos) {
      return plain(404, "not found\n");
    }
  }
  fs::path file = snapshot.root();
  for (const auto& s : segments) file /= s;
  std::error_code ec;
  if (!fs::is_regular_file(file, ec)) return plain(404, "not found\n");
  try {
    return {200, static_content_type(file), io::read_file(file), {}};
  } catch (const IoError&) {
    return plain(404, "not found\n");
  }
}

Response dispatch(const Snapshot& snapshot, std::string_view path, std::optional<std::string_view> accept) {
  if (path.starts_with("/site/") || path.starts_with("/dumps/")) return serve_static(snapshot, path);
  const auto target = snapshot.redirects().try_resolve(path, snapshot.version());
  if (!target || !target->starts_with("/site/")) return plain(404, "not found\n");
  const Resource* resource = snapshot.find(std::string_view(*target).substr(6));
  if (!resource) return plain(404, "not found\n");
  return negotiate(accept, *resource);
}

}  // namespace

const std::vector<std::string>& offered_media_types() {
  static const std::vector<std::string> offered{
      std::string(kHtml),
      std::string(rdf::media_type(rdf::Format::Turtle)),
      std::string(rdf::media_type(rdf::Format::TriG)),
      std::string(rdf::media_type(rdf::Format::NQuads)),
      std::string(rdf::media_type(rdf::Format::NTriples)),
  };
  return offered;
}

Response negotiate(std::optional<std::string_view> accept, const Resource& resource) {
  const auto chosen = choose_media_type(accept, offered_media_types());
  Response r;
  r.headers["Vary"] = "Accept";
  if (!chosen) {
    r.status = 406;
    r.contentType = "text/plain; charset=utf-8";
    r.body = "Not Acceptable. Available representations:\n";
    for (const auto& t : offered_media_types()) r.body += t + "\n";
    return r;
  }
  if (*chosen == kHtml) {
    r.status = 303;
    r.headers["Location"] = "/site/" + resource.pagePath;
    return r;
  }
  const rdf::Format f = *rdf_format(*chosen);
  r.status = 200;
  r.contentType = *chosen;
  r.body = rdf::serialize_document(resource.graph, f);
  return r;
}

Response handle_request(const Snapshot& snapshot, std::string_view method, std::string_view path,
                        std::optional<std::string_view> accept) {
  const bool head = method == "HEAD";
  if (!head && method != "GET") {
    Response r = plain(405, "method not allowed\n");
    r.headers["Allow"] = "GET, HEAD";
    return r;
  }
  Response r;
  try {
    if (const auto q = path.find_first_of("?#"); q != std::string_view::npos) path = path.substr(0, q);
    r = dispatch(snapshot, path, accept);
  } catch (const std::exception& e) {
    r = plain(500, std::string("internal error: ") + e.what() + "\n");
  }
  if (head) r.body.clear();
  return r;
}

BindAddress BindAddress::parse(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) throw ConfigError("bind address must be host:port: " + text);
  BindAddress a;
  a.host = text.substr(0, colon);
  if (a.host.size() > 2 && a.host.front() == '[' && a.host.back() == ']') a.host = a.host.substr(1, a.host.size() - 2);
  const std::string port = text.substr(colon + 1);
  char* end = nullptr;
  const long p = std::strtol(port.c_str(), &end, 10);
  if (port.empty() || *end != '\0' || p < 0 || p > 65535) throw ConfigError("bad port in bind address: " + text);
  a.port = static_cast<int>(p);
  return a;
}

BindAddress BindAddress::from_environment() {
  if (const char* env = std::getenv("RBKIT_BIND"); env && *env) return parse(env);
  return {};
}

struct HttpServer::Impl {
  SnapshotHolder& holder;
  httplib::Server server;

  explicit Impl(SnapshotHolder& h) : holder(h) {}
};

HttpServer::HttpServer(SnapshotHolder& holder) : impl_(std::make_unique<Impl>(holder)) {
  impl_->server.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    const auto snapshot = impl_->holder.get();
    std::optional<std::string_view> accept;
    if (req.has_header("Accept")) accept = req.get_header_value("Accept");
    // httplib answers HEAD through this handler and strips the body itself.
    Response r = handle_request(*snapshot, "GET", req.path, accept);
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    if (!r.contentType.empty()) res.set_content(std::move(r.body), r.contentType);
  });
  const auto notAllowed = [](const httplib::Request&, httplib::Response& res) {
    res.status = 405;
    res.set_header("Allow", "GET, HEAD");
    res.set_content("method not allowed\n", "text/plain; charset=utf-8");
  };
  impl_->server.Post(".*", notAllowed);
  impl_->server.Put(".*", notAllowed);
  impl_->server.Delete(".*", notAllowed);
  impl_->server.Patch(".*", notAllowed);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace rbkit::server
