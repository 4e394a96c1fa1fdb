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

#include <optional>
#include <string>
#include <vector>

#include "rbkit/metadata/types.hpp"
#include "rbkit/rdf/dataset.hpp"
#include "rbkit/vocab.hpp"

namespace rbkit::metadata {

/// Subjects typed with `type` in the default graph, in canonical order.
std::vector<rdf::Iri> typed_subjects(const rdf::Dataset& graph, const rdf::Term& type);

/// The single subject typed with `type`. Throws MissingFieldError("type") when
/// there is none and TypeMismatchError("type") when there are several.
rdf::Iri single_typed_subject(const rdf::Dataset& graph, const rdf::Term& type);

/// Typed projection of a dataset description. Triples outside the vocabulary
/// are ignored. Throws MissingFieldError / TypeMismatchError.
DatasetMetadata extract_dataset_metadata(const rdf::Dataset& graph, const rdf::Iri& subject,
                                         const Vocabulary& vocab = Vocabulary::standard());
TaskMetadata extract_task_metadata(const rdf::Dataset& graph, const rdf::Iri& subject,
                                   const Vocabulary& vocab = Vocabulary::standard());
ProfileMetadata extract_profile_metadata(const rdf::Dataset& graph, const rdf::Iri& subject,
                                         const Vocabulary& vocab = Vocabulary::standard());

/// Checks the curator criteria. Rule ids: id-format, open-license,
/// authorship, orcid-checksum, sufficient-size, clear-use-case.
ValidationReport validate_dataset_metadata(const DatasetMetadata& md,
                                           const ValidationPolicy& policy = {});

/// Conjunction of every constraint; an empty profile accepts everything.
bool profile_accepts(const ProfileMetadata& profile, const DatasetMetadata& md);

/// Union of the two graphs, except that for functional (computed) predicates
/// the computed value replaces the original one. A declared element count
/// that disagrees with the computed count raises ConflictError.
rdf::Dataset enrich_metadata(const rdf::Dataset& original, const rdf::Dataset& computed,
                             const Vocabulary& vocab = Vocabulary::standard());

/// Predicates whose computed value wins during enrichment.
std::vector<rdf::Term> functional_predicates(const Vocabulary& vocab = Vocabulary::standard());

rdf::Dataset to_rdf(const DatasetMetadata& md, const Vocabulary& vocab = Vocabulary::standard());
rdf::Dataset to_rdf(const TaskMetadata& md, const Vocabulary& vocab = Vocabulary::standard());
rdf::Dataset to_rdf(const ProfileMetadata& md, const Vocabulary& vocab = Vocabulary::standard());

/// The report as an RDF graph rooted at `subject` (a fresh blank node when
/// absent).
rdf::Dataset to_rdf(const ValidationReport& report,
                    const std::optional<rdf::Iri>& subject = std::nullopt,
                    const Vocabulary& vocab = Vocabulary::standard());

/// Human-readable rendering; one line per violation.
std::string render_text(const ValidationReport& report, const std::string& label = {});

/// Registers the usual prefixes (rdf, xsd, the registry vocabulary) on `graph`.
void add_standard_prefixes(rdf::Dataset& graph, const Vocabulary& vocab = Vocabulary::standard());

}  // namespace rbkit::metadata
