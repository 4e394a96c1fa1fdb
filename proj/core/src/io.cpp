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

#include "rbkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "rbkit/error.hpp"

namespace fs = std::filesystem;

namespace rbkit::io {

std::string read_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("cannot read " + path.string() + ": not a file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return std::move(buf).str();
}

void write_file(const fs::path& path, std::string_view bytes) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

StagedDirectory::StagedDirectory(fs::path target) : target_(std::move(target)) {
  if (target_.filename().empty()) target_ = target_.parent_path();
  fs::path parent = target_.has_parent_path() ? target_.parent_path() : fs::path(".");
  std::error_code ec;
  fs::create_directories(parent, ec);
  if (ec) throw IoError("cannot create " + parent.string() + ": " + ec.message());

  std::random_device rd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::ostringstream name;
    name << '.' << target_.filename().string() << ".staging-" << std::hex << rd();
    fs::path candidate = parent / name.str();
    if (fs::create_directory(candidate, ec)) {
      staging_ = std::move(candidate);
      return;
    }
  }
  throw IoError("cannot create a staging directory in " + parent.string());
}

StagedDirectory::~StagedDirectory() {
  if (committed_) return;
  std::error_code ec;
  fs::remove_all(staging_, ec);
}

void StagedDirectory::commit() {
  std::error_code ec;
  fs::path old;
  if (fs::exists(target_, ec)) {
    old = staging_;
    old += ".old";
    fs::rename(target_, old, ec);
    if (ec) throw IoError("cannot replace " + target_.string() + ": " + ec.message());
  }
  fs::rename(staging_, target_, ec);
  if (ec) {
    if (!old.empty()) fs::rename(old, target_, ec);
    throw IoError("cannot move output into " + target_.string());
  }
  committed_ = true;
  if (!old.empty()) fs::remove_all(old, ec);
}

std::vector<fs::path> list_files(const fs::path& root) {
  std::vector<fs::path> out;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, ec);
  if (ec) throw IoError("cannot list " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file()) out.push_back(fs::relative(entry.path(), root));
  }
  std::ranges::sort(out, {}, [](const fs::path& p) { return p.generic_string(); });
  return out;
}

}  // namespace rbkit::io
