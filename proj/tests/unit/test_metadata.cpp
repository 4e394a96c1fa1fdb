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

#include <doctest.h>

#include "fixtures.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/metadata/metadata.hpp"
#include "rbkit/orcid.hpp"
#include "rbkit/rdf/parser.hpp"

using namespace rbkit;
using namespace rbkit::metadata;

namespace {

const Vocabulary& V = Vocabulary::standard();

rdf::Dataset load(const std::string& rel) {
  return rdf::parse_document(io::read_file(testing::fixture(rel)), rdf::Format::Turtle);
}

DatasetMetadata load_dataset(const std::string& rel) {
  const auto g = load(rel);
  return extract_dataset_metadata(g, single_typed_subject(g, V.Dataset));
}

const std::string kPrefix = "@prefix rb: <https://w3id.org/rbkit/vocab/1.0#> .\n";

rdf::Dataset turtle(const std::string& body) { return rdf::parse_document(kPrefix + body, rdf::Format::Turtle); }

}  // namespace

TEST_SUITE("orcid") {
  TEST_CASE("hand-computed check digits") {
    CHECK(Orcid::check_digit("000000021825009") == '7');
    CHECK(Orcid::check_digit("000000021694233") == 'X');
    CHECK(Orcid::check_digit("000000015109370") == '0');
    CHECK(Orcid::is_valid("0000-0002-1825-0097"));
    CHECK(Orcid::is_valid("0000-0002-1694-233X"));
    CHECK_FALSE(Orcid::is_valid("0000-0002-1825-0098"));
    CHECK_FALSE(Orcid::is_valid("0000-0002-1694-233x"));
    CHECK_FALSE(Orcid::is_valid("0000000218250097"));
    CHECK_FALSE(Orcid::is_valid("0000-0002-1825-009"));
  }

  TEST_CASE("IRI forms") {
    CHECK(Orcid::parse("https://orcid.org/0000-0002-1825-0097")->str() == "0000-0002-1825-0097");
    CHECK(Orcid::parse("http://orcid.org/0000-0002-1825-0097")->iri() ==
          "https://orcid.org/0000-0002-1825-0097");
    CHECK_FALSE(Orcid::parse("https://example.org/0000-0002-1825-0097").has_value());
  }
}

TEST_SUITE("metadata.extract") {
  TEST_CASE("dataset fixture") {
    const auto md = load_dataset("stream20/metadata.ttl");
    CHECK(md.id == "stream20");
    CHECK(md.iri.str() == "https://w3id.org/rbkit/datasets/stream20");
    CHECK(md.declaredElementCount == 20);
    CHECK(md.streamElementType == StreamElementType::Triples);
    REQUIRE(md.creators.size() == 1);
    CHECK(md.creators[0].name == "Ada Example");
    CHECK(md.creators[0].orcid == "0000-0002-1825-0097");
    CHECK_FALSE(md.useCase.empty());
  }

  TEST_CASE("missing and mistyped fields name the field") {
    try {
      extract_dataset_metadata(turtle("<http://e/d> a rb:Dataset ; rb:identifier \"d\" ."), rdf::Iri("http://e/d"));
      FAIL("expected MissingFieldError");
    } catch (const MissingFieldError& e) {
      CHECK(e.field() == "title");
    }
    const auto g = turtle(R"(<http://e/d> a rb:Dataset ; rb:identifier "d" ; rb:title "t" ;
      rb:description "x" ; rb:license "not an IRI" ; rb:streamElementType rb:Triples ; rb:elementCount 3 .)");
    try {
      extract_dataset_metadata(g, rdf::Iri("http://e/d"));
      FAIL("expected TypeMismatchError");
    } catch (const TypeMismatchError& e) {
      CHECK(e.field() == "license");
    }
    const auto negative = turtle(R"(<http://e/d> a rb:Dataset ; rb:identifier "d" ; rb:title "t" ;
      rb:description "x" ; rb:license <http://l> ; rb:streamElementType rb:Triples ; rb:elementCount -3 .)");
    CHECK_THROWS_AS(extract_dataset_metadata(negative, rdf::Iri("http://e/d")), TypeMismatchError);
  }

  TEST_CASE("single typed subject") {
    CHECK_THROWS_AS(single_typed_subject(turtle("<http://e/x> rb:name \"x\" ."), V.Dataset), MissingFieldError);
    CHECK_THROWS_AS(single_typed_subject(turtle("<http://e/a> a rb:Dataset . <http://e/b> a rb:Dataset ."), V.Dataset),
                    TypeMismatchError);
  }

  TEST_CASE("task and profile fixtures") {
    const auto tg = load("catalog/tasks/stream-compression/metadata.ttl");
    const auto task = extract_task_metadata(tg, single_typed_subject(tg, V.Task));
    CHECK(task.id == "stream-compression");
    REQUIRE(task.metrics.size() == 2);
    CHECK(task.metrics[0].name == "ratio");
    CHECK(task.metrics[0].direction == Direction::HigherBetter);
    CHECK(task.metrics[1].unit == "ms");
    REQUIRE(task.requiredProfiles.size() == 1);

    const auto pg = load("catalog/profiles/flat-triples/metadata.ttl");
    const auto profile = extract_profile_metadata(pg, single_typed_subject(pg, V.Profile));
    REQUIRE(profile.constraints.size() == 1);
    CHECK(profile.constraints[0] == Constraint::element_type_is(StreamElementType::Triples));
  }

  TEST_CASE("tasks need metrics, profiles need consistent bounds") {
    CHECK_THROWS_AS(extract_task_metadata(turtle(R"(<http://e/t> a rb:Task ; rb:identifier "t" ;
      rb:name "T" ; rb:description "d" .)"), rdf::Iri("http://e/t")), MissingFieldError);
    const auto bad = turtle(R"(<http://e/p> a rb:Profile ; rb:identifier "p" ; rb:name "P" ;
      rb:constraint [ rb:constraintKind rb:MinElementCount ; rb:constraintValue 10 ] ,
                    [ rb:constraintKind rb:MaxElementCount ; rb:constraintValue 5 ] .)");
    CHECK_THROWS_AS(extract_profile_metadata(bad, rdf::Iri("http://e/p")), TypeMismatchError);
  }

  TEST_CASE("to_rdf reads back to the same record") {
    const auto md = load_dataset("stream20/metadata.ttl");
    CHECK(extract_dataset_metadata(to_rdf(md), md.iri) == md);
    const auto tg = load("catalog/tasks/grpc-latency/metadata.ttl");
    const auto task = extract_task_metadata(tg, single_typed_subject(tg, V.Task));
    CHECK(extract_task_metadata(to_rdf(task), task.iri) == task);
    const auto pg = load("catalog/profiles/stream-mixed/metadata.ttl");
    const auto profile = extract_profile_metadata(pg, single_typed_subject(pg, V.Profile));
    CHECK(extract_profile_metadata(to_rdf(profile), profile.iri) == profile);
  }
}

TEST_SUITE("metadata.validate") {
  TEST_CASE("compliant fixture passes") {
    CHECK(validate_dataset_metadata(load_dataset("curator/compliant/metadata.ttl")).passed());
  }

  TEST_CASE("each curator fixture breaks exactly one rule") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"license", "open-license"},
        {"authorship", "authorship"},
        {"size", "sufficient-size"},
        {"usecase", "clear-use-case"},
    };
    for (const auto& [dir, rule] : cases) {
      CAPTURE(dir);
      const auto report = validate_dataset_metadata(load_dataset("curator/" + dir + "/metadata.ttl"));
      REQUIRE(report.violations().size() == 1);
      CHECK(report.violations()[0].ruleId == rule);
      CHECK(report.violations()[0].severity == Severity::Error);
    }
  }

  TEST_CASE("size threshold is inclusive and configurable") {
    auto md = load_dataset("curator/compliant/metadata.ttl");
    md.declaredElementCount = 1000;
    CHECK(validate_dataset_metadata(md).passed());
    md.declaredElementCount = 999;
    CHECK(validate_dataset_metadata(md).error_count() == 1);
    CHECK(validate_dataset_metadata(md, {.licenseAllowList = ValidationPolicy::default_license_allow_list(),
                                         .minElementCount = 10})
              .passed());
  }

  TEST_CASE("license spellings") {
    auto md = load_dataset("curator/compliant/metadata.ttl");
    for (const char* iri : {"http://creativecommons.org/licenses/by/4.0", "https://CreativeCommons.org/licenses/by/4.0/",
                            "https://creativecommons.org/publicdomain/zero/1.0/"}) {
      md.license = rdf::Iri(iri);
      CHECK(validate_dataset_metadata(md).passed());
    }
    md.license = rdf::Iri("https://creativecommons.org/licenses/by-nc/4.0/");
    CHECK(validate_dataset_metadata(md).violations()[0].ruleId == "open-license");
  }

  TEST_CASE("identifier format, unnamed creators and bad ORCIDs") {
    auto md = load_dataset("curator/compliant/metadata.ttl");
    md.id = "Bad_Id";
    md.creators = {{"", std::string("0000-0002-1825-0098")}};
    const auto report = validate_dataset_metadata(md);
    std::vector<std::string> rules;
    for (const auto& v : report.violations()) rules.push_back(v.ruleId);
    CHECK(rules == std::vector<std::string>{"authorship", "id-format", "orcid-checksum"});
  }

  TEST_CASE("report order is stable") {
    ValidationReport a, b;
    a.add("x", "p", Severity::Error, "m1");
    a.add("a", "p", Severity::Warning, "m2");
    b.add("a", "p", Severity::Warning, "m2");
    b.add("x", "p", Severity::Error, "m1");
    CHECK(a == b);
    CHECK(a.error_count() == 1);
    CHECK(render_text(a, "f") == "f: WARNING [a] p: m2\nf: ERROR [x] p: m1\n");
  }

  TEST_CASE("report as RDF") {
    ValidationReport r;
    r.add("open-license", "license", Severity::Error, "no");
    const auto g = to_rdf(r, rdf::Iri("http://e/d"));
    const auto s = rdf::Term::iri("http://e/d");
    CHECK(g.objects(s, V.conforms) == std::vector{rdf::Term::boolean(false)});
    CHECK(g.objects(s, V.violation).size() == 1);
  }
}

TEST_SUITE("metadata.profiles") {
  TEST_CASE("constraints are a conjunction") {
    auto md = load_dataset("stream20/metadata.ttl");
    ProfileMetadata p{rdf::Iri("http://e/p"), "p", "P", {}};
    CHECK(profile_accepts(p, md));
    p.constraints = {Constraint::element_type_is(StreamElementType::Triples), Constraint::min_elements(20)};
    CHECK(profile_accepts(p, md));
    p.constraints.push_back(Constraint::max_elements(19));
    CHECK_FALSE(profile_accepts(p, md));
    p.constraints = {Constraint::element_type_is(StreamElementType::Quads)};
    CHECK_FALSE(profile_accepts(p, md));
  }
}

TEST_SUITE("metadata.enrich") {
  TEST_CASE("computed values replace declared ones") {
    const auto original = turtle(R"(<http://e/d> rb:elementCount 20 ; rb:byteSize 1 ; rb:title "t" .)");
    const auto computed = turtle(R"(<http://e/d> rb:elementCount "20"^^<http://www.w3.org/2001/XMLSchema#nonNegativeInteger> ;
      rb:byteSize 99 ; rb:statementCount 60 .)");
    const auto out = enrich_metadata(original, computed);
    const auto s = rdf::Term::iri("http://e/d");
    CHECK(out.objects(s, V.byteSize) == std::vector{rdf::Term::integer(99)});
    CHECK(out.objects(s, V.statementCount).size() == 1);
    CHECK(out.objects(s, V.title).size() == 1);
    CHECK(out.objects(s, V.elementCount).size() == 1);
  }

  TEST_CASE("a disagreeing element count is a conflict") {
    CHECK_THROWS_AS(enrich_metadata(turtle("<http://e/d> rb:elementCount 21 ."),
                                    turtle("<http://e/d> rb:elementCount 20 .")),
                    ConflictError);
  }

  TEST_CASE("enrichment is idempotent") {
    const auto original = load("stream20/metadata.ttl");
    const auto computed = turtle("<https://w3id.org/rbkit/datasets/stream20> rb:statementCount 60 ; rb:elementCount 20 .");
    const auto once = enrich_metadata(original, computed);
    CHECK(enrich_metadata(once, computed) == once);
  }
}
