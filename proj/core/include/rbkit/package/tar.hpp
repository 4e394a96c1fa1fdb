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

#include <string>
#include <string_view>
#include <vector>

namespace rbkit::package {

struct TarMember {
  std::string name;
  std::string content;

  friend bool operator==(const TarMember&, const TarMember&) = default;
};

/// Uncompressed ustar archive of regular files, in the given order. Every
/// header has mode 0644, uid/gid 0, empty owner names and mtime 0, so the
/// output depends only on names and contents. Names longer than 100 bytes
/// are rejected with std::invalid_argument.
std::string write_tar(const std::vector<TarMember>& members);

/// Regular-file members of a ustar or v7 archive, in archive order. Other
/// entry types are skipped. Throws SyntaxError on a corrupt header.
std::vector<TarMember> read_tar(std::string_view archive);

}  // namespace rbkit::package
