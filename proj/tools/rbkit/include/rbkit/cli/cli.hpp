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

#include <iosfwd>
#include <string>
#include <vector>

namespace rbkit::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  /// Validation errors, malformed metadata, usage errors.
  kDomainError = 1,
  /// Unreadable files, syntax errors, unreachable services, bad config.
  kEnvironmentError = 2,
};

/// Runs one command line (without the program name) and returns its exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbkit::cli
