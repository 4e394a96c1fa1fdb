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

#include "rbkit/package/tar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "rbkit/error.hpp"

namespace rbkit::package {

namespace {

constexpr std::size_t kBlock = 512;

// Header field offsets (POSIX ustar).
constexpr std::size_t kName = 0, kMode = 100, kUid = 108, kGid = 116, kSize = 124, kMtime = 136,
                      kChecksum = 148, kType = 156, kMagic = 257, kVersion = 263;

void put_octal(std::array<char, kBlock>& h, std::size_t at, std::size_t width, std::uint64_t v) {
  // width - 1 digits followed by NUL.
  for (std::size_t i = width - 1; i-- > 0;) {
    h[at + i] = static_cast<char>('0' + (v & 7));
    v >>= 3;
  }
  if (v != 0) throw std::invalid_argument("tar field overflow");
  h[at + width - 1] = '\0';
}

std::uint64_t get_octal(std::string_view field) {
  std::uint64_t v = 0;
  std::size_t i = 0;
  while (i < field.size() && field[i] == ' ') ++i;
  for (; i < field.size() && field[i] >= '0' && field[i] <= '7'; ++i) v = v * 8 + (field[i] - '0');
  for (; i < field.size(); ++i) {
    if (field[i] != '\0' && field[i] != ' ') throw SyntaxError({1, 1}, "bad octal field in tar header");
  }
  return v;
}

std::uint64_t header_sum(std::string_view h) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < kBlock; ++i) {
    const bool inChecksum = i >= kChecksum && i < kChecksum + 8;
    sum += inChecksum ? static_cast<unsigned char>(' ') : static_cast<unsigned char>(h[i]);
  }
  return sum;
}

std::string c_string(std::string_view field) {
  return std::string(field.substr(0, std::min(field.find('\0'), field.size())));
}

}  // namespace

std::string write_tar(const std::vector<TarMember>& members) {
  std::string out;
  for (const auto& m : members) {
    if (m.name.empty() || m.name.size() > 100) {
      throw std::invalid_argument("tar member name must be 1..100 bytes: " + m.name);
    }
    std::array<char, kBlock> h{};
    std::copy(m.name.begin(), m.name.end(), h.begin() + kName);
    put_octal(h, kMode, 8, 0644);
    put_octal(h, kUid, 8, 0);
    put_octal(h, kGid, 8, 0);
    put_octal(h, kSize, 12, m.content.size());
    put_octal(h, kMtime, 12, 0);
    h[kType] = '0';
    std::copy_n("ustar", 6, h.begin() + kMagic);
    h[kVersion] = '0';
    h[kVersion + 1] = '0';
    // Six digits, NUL, space.
    put_octal(h, kChecksum, 7, header_sum(std::string_view(h.data(), kBlock)));
    h[kChecksum + 7] = ' ';

    out.append(h.data(), kBlock);
    out += m.content;
    out.append((kBlock - m.content.size() % kBlock) % kBlock, '\0');
  }
  out.append(2 * kBlock, '\0');
  return out;
}

std::vector<TarMember> read_tar(std::string_view archive) {
  std::vector<TarMember> out;
  std::size_t pos = 0;
  while (pos + kBlock <= archive.size()) {
    const std::string_view h = archive.substr(pos, kBlock);
    if (std::ranges::all_of(h, [](char c) { return c == '\0'; })) break;
    const auto offset = [&] { return TextPosition{1, pos + 1}; };
    if (get_octal(h.substr(kChecksum, 8)) != header_sum(h)) {
      throw SyntaxError(offset(), "tar header checksum mismatch");
    }
    const std::uint64_t size = get_octal(h.substr(kSize, 12));
    pos += kBlock;
    if (size > archive.size() - pos) throw SyntaxError(offset(), "truncated tar member");
    std::string name = c_string(h.substr(kName, 100));
    if (h.substr(kMagic, 5) == "ustar") {
      std::string prefix = c_string(h.substr(345, 155));
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    const char type = h[kType];
    if (type == '0' || type == '\0') {
      out.push_back({std::move(name), std::string(archive.substr(pos, size))});
    }
    pos += (size + kBlock - 1) / kBlock * kBlock;
  }
  return out;
}

}  // namespace rbkit::package
