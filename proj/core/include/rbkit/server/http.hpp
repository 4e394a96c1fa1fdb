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

#include <memory>
#include <string>

#include "rbkit/server/snapshot.hpp"

namespace rbkit::server {

/// host:port, from RBKIT_BIND when set, else 127.0.0.1:8080.
struct BindAddress {
  std::string host = "127.0.0.1";
  int port = 8080;

  /// Parses "host:port" (IPv6 hosts in brackets). Throws ConfigError.
  static BindAddress parse(const std::string& text);
  static BindAddress from_environment();
};

/// HTTP/1.1 front end over a SnapshotHolder. Each request reads the
/// snapshot once and is answered by handle_request.
class HttpServer {
 public:
  explicit HttpServer(SnapshotHolder& holder);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port. Throws IoError.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Blocks.
  void listen();
  /// Safe to call from another thread or a signal-watching thread.
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rbkit::server
