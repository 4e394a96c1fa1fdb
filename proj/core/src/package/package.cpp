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

#include "rbkit/package/package.hpp"

#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/rdf/serializer.hpp"

namespace fs = std::filesystem;

namespace rbkit::package {

PackageResult package_dataset(const fs::path& origin, const fs::path& metadataFile,
                              const fs::path& outDir, const PackageOptions& options,
                              const Vocabulary& vocab) {
  PackageResult result;

  rdf::Dataset original;
  try {
    original = rdf::parse_document(io::read_file(metadataFile), rdf::Format::Turtle);
  } catch (const SyntaxError& e) {
    throw e.in_file(metadataFile.string());
  }
  const auto subject = metadata::single_typed_subject(original, vocab.Dataset);
  const auto md = metadata::extract_dataset_metadata(original, subject, vocab);
  const auto src = load_source(origin, options.workers);

  result.validation = metadata::validate_dataset_metadata(md, options.policy);
  result.validation.merge(validate_contents(src, md));
  if (result.validation.has_errors()) return result;

  result.statistics = compute_statistics(src);
  auto files = build_distributions(src, options.ladder, options.formats);
  for (const auto& f : files) result.distributions.push_back(f.distribution);

  const rdf::Dataset stats = to_rdf(result.statistics, subject, vocab);
  rdf::Dataset computed = stats;
  computed.merge(to_rdf(result.distributions, subject, vocab));
  rdf::Dataset enriched = metadata::enrich_metadata(original, computed, vocab);
  metadata::add_standard_prefixes(enriched, vocab);
  rdf::Dataset validation = metadata::to_rdf(result.validation, std::nullopt, vocab);

  io::StagedDirectory stage(outDir);
  for (const auto& f : files) io::write_file(stage.path() / "dist" / f.distribution.fileName, f.content);
  io::write_file(stage.path() / "stats.ttl", rdf::serialize_document(stats, rdf::Format::Turtle));
  io::write_file(stage.path() / "validation.ttl",
                 rdf::serialize_document(validation, rdf::Format::Turtle));
  io::write_file(stage.path() / "metadata.ttl", rdf::serialize_document(enriched, rdf::Format::Turtle));
  stage.commit();
  result.written = true;
  return result;
}

}  // namespace rbkit::package
