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

#include <algorithm>

#include "parallel.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/package/package.hpp"
#include "rbkit/package/tar.hpp"
#include "rbkit/rdf/parser.hpp"

namespace fs = std::filesystem;

namespace rbkit::package {

namespace {

struct RawFile {
  std::string name;
  rdf::Format format;
  std::string bytes;
};

std::vector<RawFile> read_directory(const fs::path& dir) {
  std::vector<RawFile> out;
  for (const auto& rel : io::list_files(dir)) {
    if (auto format = rdf::format_from_extension(rel)) {
      out.push_back({rel.generic_string(), *format, io::read_file(dir / rel)});
    }
  }
  return out;
}

std::vector<RawFile> read_archive(const fs::path& file) {
  std::vector<RawFile> out;
  std::vector<TarMember> members;
  try {
    members = read_tar(io::read_file(file));
  } catch (const SyntaxError& e) {
    throw e.in_file(file.string());
  }
  for (auto& m : members) {
    if (auto format = rdf::format_from_extension(m.name)) {
      out.push_back({std::move(m.name), *format, std::move(m.content)});
    }
  }
  std::ranges::sort(out, {}, &RawFile::name);
  return out;
}

}  // namespace

SourceDataset load_source(const fs::path& origin, std::size_t workers) {
  std::error_code ec;
  std::vector<RawFile> files;
  if (fs::is_directory(origin, ec)) {
    files = read_directory(origin);
  } else if (fs::is_regular_file(origin, ec) && origin.extension() == ".tar") {
    files = read_archive(origin);
  } else if (!fs::exists(origin, ec)) {
    throw IoError("source not found: " + origin.string());
  } else {
    throw IoError("source must be a directory or a .tar archive: " + origin.string());
  }
  if (files.empty()) throw EmptySourceError("no RDF files in " + origin.string());

  SourceDataset src;
  src.origin = origin;
  src.elements.resize(files.size());
  detail::parallel_for(files.size(), workers, [&](std::size_t i) {
    try {
      src.elements[i] = {files[i].name, rdf::parse_document(files[i].bytes, files[i].format)};
    } catch (const SyntaxError& e) {
      throw e.in_file(files[i].name);
    }
  });
  return src;
}

metadata::ValidationReport validate_contents(const SourceDataset& src,
                                             const metadata::DatasetMetadata& md) {
  using metadata::Severity;
  metadata::ValidationReport report;
  for (std::size_t i = 0; i < src.elements.size(); ++i) {
    const auto& e = src.elements[i];
    const std::string path = "element[" + std::to_string(i) + "]";
    if (md.streamElementType == metadata::StreamElementType::Triples && e.data.has_named_graphs()) {
      report.add("named-graphs", path, Severity::Error,
                 e.fileName + " uses named graphs but the dataset declares triples");
    }
    if (e.data.empty()) {
      report.add("empty-element", path, Severity::Warning, e.fileName + " has no statements");
    }
  }
  if (src.elements.size() != md.declaredElementCount) {
    report.add("element-count-mismatch", "declaredElementCount", Severity::Error,
               std::to_string(md.declaredElementCount) + " elements declared, " +
                   std::to_string(src.elements.size()) + " found");
  }
  return report;
}

}  // namespace rbkit::package
