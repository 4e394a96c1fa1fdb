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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rbkit::io {

/// Whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Writes `bytes`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// A scratch directory next to `target` that replaces `target` on commit().
/// When destroyed without commit() the scratch directory is removed, so a
/// failed run leaves `target` untouched.
class StagedDirectory {
 public:
  explicit StagedDirectory(std::filesystem::path target);
  ~StagedDirectory();

  StagedDirectory(const StagedDirectory&) = delete;
  StagedDirectory& operator=(const StagedDirectory&) = delete;

  const std::filesystem::path& path() const noexcept { return staging_; }
  const std::filesystem::path& target() const noexcept { return target_; }

  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path staging_;
  bool committed_ = false;
};

/// Regular files below `root`, relative to it, in lexicographic order of
/// their generic (slash-separated) form.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& root);

}  // namespace rbkit::io
