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

#include <array>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "rbkit/error.hpp"
#include "rbkit/io.hpp"
#include "rbkit/rdf/isomorphism.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/rdf/serializer.hpp"

using namespace rbkit;
using rdf::Format;
using rdf::Term;

namespace {

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }

}  // namespace

TEST_SUITE("rdf.iri") {
  TEST_CASE("absolute IRIs only") {
    CHECK_NOTHROW(rdf::Iri("http://example.org/x"));
    CHECK_NOTHROW(rdf::Iri("urn:isbn:0451450523"));
    CHECK_THROWS(rdf::Iri("relative/path"));
    CHECK_THROWS(rdf::Iri(""));
    CHECK_FALSE(rdf::Iri::try_parse("1http://x").has_value());
  }

  TEST_CASE("reference resolution vectors") {
    const std::string base = "http://a/b/c/d;p?q";
    const std::array<std::pair<const char*, const char*>, 40> cases{{
        {"g:h", "g:h"},
        {"g", "http://a/b/c/g"},
        {"./g", "http://a/b/c/g"},
        {"g/", "http://a/b/c/g/"},
        {"/g", "http://a/g"},
        {"//g", "http://g"},
        {"?y", "http://a/b/c/d;p?y"},
        {"g?y", "http://a/b/c/g?y"},
        {"#s", "http://a/b/c/d;p?q#s"},
        {"g#s", "http://a/b/c/g#s"},
        {"g?y#s", "http://a/b/c/g?y#s"},
        {";x", "http://a/b/c/;x"},
        {"g;x", "http://a/b/c/g;x"},
        {"g;x?y#s", "http://a/b/c/g;x?y#s"},
        {"", "http://a/b/c/d;p?q"},
        {".", "http://a/b/c/"},
        {"./", "http://a/b/c/"},
        {"..", "http://a/b/"},
        {"../", "http://a/b/"},
        {"../g", "http://a/b/g"},
        {"../..", "http://a/"},
        {"../../", "http://a/"},
        {"../../g", "http://a/g"},
        {"../../../g", "http://a/g"},
        {"../../../../g", "http://a/g"},
        {"/./g", "http://a/g"},
        {"/../g", "http://a/g"},
        {"g.", "http://a/b/c/g."},
        {".g", "http://a/b/c/.g"},
        {"g..", "http://a/b/c/g.."},
        {"..g", "http://a/b/c/..g"},
        {"./../g", "http://a/b/g"},
        {"./g/.", "http://a/b/c/g/"},
        {"g/./h", "http://a/b/c/g/h"},
        {"g/../h", "http://a/b/c/h"},
        {"g;x=1/./y", "http://a/b/c/g;x=1/y"},
        {"g;x=1/../y", "http://a/b/c/y"},
        {"g?y/./x", "http://a/b/c/g?y/./x"},
        {"g#s/../x", "http://a/b/c/g#s/../x"},
        {"http:g", "http:g"},
    }};
    for (const auto& [ref, expected] : cases) {
      CAPTURE(ref);
      CHECK(rdf::resolve_iri(base, ref) == expected);
    }
  }
}

TEST_SUITE("rdf.term") {
  TEST_CASE("literal normal forms") {
    CHECK(Term::literal("a").datatype() == rdf::xsd::string);
    const Term tagged = Term::lang_literal("chat", "FR-ca");
    CHECK(tagged.language() == "fr-ca");
    CHECK(tagged.datatype() == rdf::rdfns::langString);
    CHECK(tagged.nt() == "\"chat\"@fr-ca");
    CHECK(Term::literal("a\"b\n").nt() == "\"a\\\"b\\n\"");
    CHECK(Term::integer(-3).nt() == "\"-3\"^^<http://www.w3.org/2001/XMLSchema#integer>");
    CHECK(Term::literal("+5", rdf::xsd::integer).as_integer() == 5);
    CHECK_FALSE(Term::literal("five", rdf::xsd::integer).as_integer().has_value());
  }

  TEST_CASE("literals are rejected outside object position") {
    CHECK_THROWS(rdf::Quad::make(Term::literal("x"), ex("p"), ex("o")));
    CHECK_THROWS(rdf::Quad::make(ex("s"), Term::blank("b"), ex("o")));
    CHECK_THROWS(rdf::Quad::make(ex("s"), ex("p"), ex("o"), Term::literal("g")));
  }

  TEST_CASE("canonical quad order") {
    const auto q = [](Term s, std::optional<Term> g = std::nullopt) {
      return rdf::Quad::make(std::move(s), ex("p"), ex("o"), std::move(g));
    };
    CHECK(rdf::canonical_quad_order(q(ex("z")), q(ex("a"), ex("g"))) < 0);
    CHECK(rdf::canonical_quad_order(q(ex("z")), q(Term::blank("a"))) < 0);
    CHECK(rdf::canonical_quad_order(q(ex("a")), q(ex("b"))) < 0);
    CHECK(rdf::canonical_quad_order(q(ex("a")), q(ex("a"))) == 0);
    const auto lit = rdf::Quad::make(ex("s"), ex("p"), Term::literal("a"));
    const auto blank = rdf::Quad::make(ex("s"), ex("p"), Term::blank("a"));
    CHECK(rdf::canonical_quad_order(blank, lit) < 0);
  }
}

TEST_SUITE("rdf.parser") {
  TEST_CASE("corpus agrees with rdflib") {
    const std::array<std::pair<const char*, Format>, 4> docs{{
        {"collections.ttl", Format::Turtle},
        {"literals.ttl", Format::Turtle},
        {"graphs.trig", Format::TriG},
        {"ntriples.nt", Format::NTriples},
    }};
    for (const auto& [name, format] : docs) {
      CAPTURE(name);
      const auto dir = testing::fixture("parser");
      const auto ours = rdf::parse_document(io::read_file(dir / name), format);
      const auto theirs = rdf::parse_document(
          io::read_file(dir / (std::string(name) + ".expected.nq")), Format::NQuads);
      CHECK(ours.size() == theirs.size());
      CHECK(rdf::dataset_isomorphic(ours, theirs));
    }
  }

  TEST_CASE("numeric shorthand keeps its lexical form") {
    const auto d = rdf::parse_document(
        "<http://e/s> <http://e/p> +3, .5, 1E3, 007 .", Format::Turtle);
    CHECK(d.contains(rdf::Quad::make(Term::iri("http://e/s"), Term::iri("http://e/p"),
                                     Term::literal("+3", rdf::xsd::integer))));
    CHECK(d.contains(rdf::Quad::make(Term::iri("http://e/s"), Term::iri("http://e/p"),
                                     Term::literal(".5", rdf::xsd::decimal))));
    CHECK(d.contains(rdf::Quad::make(Term::iri("http://e/s"), Term::iri("http://e/p"),
                                     Term::literal("1E3", rdf::xsd::double_))));
    CHECK(d.contains(rdf::Quad::make(Term::iri("http://e/s"), Term::iri("http://e/p"),
                                     Term::literal("007", rdf::xsd::integer))));
  }

  TEST_CASE("Turtle and N-Triples only fill the default graph") {
    const auto d = rdf::parse_document("<http://e/s> <http://e/p> <http://e/o> .", Format::NTriples);
    CHECK_FALSE(d.has_named_graphs());
    CHECK_THROWS_AS(rdf::parse_document("<http://e/g> { <http://e/s> <http://e/p> <http://e/o> }",
                                        Format::Turtle),
                    SyntaxError);
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      rdf::parse_document("@prefix ex: <http://e/> .\nex:s ex:p \"unterminated .\n", Format::Turtle);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position().line >= 2);
    }
    CHECK_THROWS_AS(rdf::parse_document("<http://e/s> <http://e/p> .", Format::NTriples), SyntaxError);
    CHECK_THROWS_AS(rdf::parse_document("ex:s ex:p ex:o .", Format::Turtle), SyntaxError);
  }

  TEST_CASE("relative IRIs need a base") {
    CHECK_THROWS_AS(rdf::parse_document("<s> <http://e/p> <o> .", Format::Turtle), RelativeIriError);
    const auto d = rdf::parse_document("<s> <http://e/p> <o> .", Format::Turtle, "http://base/x/");
    CHECK(d.contains(rdf::Quad::make(Term::iri("http://base/x/s"), Term::iri("http://e/p"),
                                     Term::iri("http://base/x/o"))));
  }

  TEST_CASE("malformed UTF-8 is an encoding error") {
    CHECK_THROWS_AS(rdf::parse_document("<http://e/s> <http://e/p> \"\xC3\x28\" .", Format::NTriples),
                    EncodingError);
    CHECK_THROWS_AS(rdf::validate_utf8("\xED\xA0\x80"), EncodingError);
    CHECK_NOTHROW(rdf::validate_utf8("caf\xC3\xA9 \xF0\x9F\x98\x80"));
  }

  TEST_CASE("generated blank labels never collide with written ones") {
    const auto d = rdf::parse_document("_:b0 <http://e/p> [ <http://e/q> _:b1 ] .", Format::Turtle);
    CHECK(d.blank_nodes().size() == 3);
  }
}

TEST_SUITE("rdf.serializer") {
  TEST_CASE("named graphs need a quad syntax") {
    rdf::Dataset d;
    d.add(ex("s"), ex("p"), ex("o"), ex("g"));
    CHECK_THROWS_AS(rdf::serialize_document(d, Format::Turtle), FormatCapabilityError);
    CHECK_THROWS_AS(rdf::serialize_document(d, Format::NTriples), FormatCapabilityError);
    CHECK_NOTHROW(rdf::serialize_document(d, Format::TriG));
  }

  TEST_CASE("N-Quads is one canonical statement per line") {
    rdf::Dataset d;
    d.add(ex("b"), ex("p"), Term::literal("x"));
    d.add(ex("a"), ex("p"), Term::blank("zz"), ex("g"));
    d.add(ex("a"), ex("p"), ex("o"));
    CHECK(rdf::serialize_document(d, Format::NQuads) ==
          "<http://example.org/a> <http://example.org/p> <http://example.org/o> .\n"
          "<http://example.org/b> <http://example.org/p> \"x\" .\n"
          "<http://example.org/a> <http://example.org/p> _:b0 <http://example.org/g> .\n");
  }

  TEST_CASE("relabeling does not change the output") {
    testing::DatasetGenerator gen(7);
    for (int i = 0; i < 50; ++i) {
      const auto d = gen.next();
      const auto relabeled = testing::shuffle_labels(d, gen.rng());
      for (const Format f : rdf::kAllFormats) {
        if (d.has_named_graphs() && !rdf::supports_named_graphs(f)) continue;
        CHECK(rdf::serialize_document(d, f) == rdf::serialize_document(d, f));
      }
      CHECK(rdf::dataset_isomorphic(rdf::canonicalize(d), rdf::canonicalize(relabeled)));
    }
  }

  TEST_CASE("round trip through every legal format") {
    testing::DatasetGenerator gen(11);
    for (int i = 0; i < 100; ++i) {
      const auto d = gen.next();
      for (const Format f : rdf::kAllFormats) {
        if (d.has_named_graphs() && !rdf::supports_named_graphs(f)) continue;
        const auto text = rdf::serialize_document(d, f);
        CAPTURE(text);
        CHECK(rdf::dataset_isomorphic(rdf::parse_document(text, f), d));
      }
    }
  }

  TEST_CASE("prefixes shorten Turtle output") {
    rdf::Dataset d;
    d.set_prefix("ex", "http://example.org/");
    d.add(ex("s"), ex("p"), ex("o"));
    const auto text = rdf::serialize_document(d, Format::Turtle);
    CHECK(text.find("@prefix ex: <http://example.org/> .") != std::string::npos);
    CHECK(text.find("ex:s ex:p ex:o") != std::string::npos);
  }
}

TEST_SUITE("rdf.isomorphism") {
  TEST_CASE("agrees with brute force on generated pairs") {
    testing::DatasetGenerator gen(3);
    int positives = 0, negatives = 0;
    for (int i = 0; i < 300; ++i) {
      const auto a = gen.next({.maxQuads = 8, .maxBlankNodes = 6, .namedGraphs = true});
      const auto b = i % 2 ? testing::shuffle_labels(a, gen.rng())
                           : gen.next({.maxQuads = 8, .maxBlankNodes = 6, .namedGraphs = true});
      const bool expected = testing::brute_force_isomorphic(a, b);
      (expected ? positives : negatives)++;
      CHECK(rdf::dataset_isomorphic(a, b) == expected);
    }
    CHECK(positives >= 150);
    CHECK(negatives > 0);
  }

  TEST_CASE("refinement-equivalent but non-isomorphic graphs") {
    // A 6-cycle and two triangles give every node the same color.
    const auto ring = [](const std::vector<std::pair<int, int>>& edges) {
      rdf::Dataset d;
      for (const auto& [a, b] : edges) {
        d.add(Term::blank("n" + std::to_string(a)), ex("next"), Term::blank("n" + std::to_string(b)));
      }
      return d;
    };
    const auto hexagon = ring({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const auto triangles = ring({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(testing::brute_force_isomorphic(hexagon, triangles));
    CHECK_FALSE(rdf::dataset_isomorphic(hexagon, triangles));
    const auto rotated = ring({{3, 4}, {4, 5}, {5, 0}, {0, 1}, {1, 2}, {2, 3}});
    CHECK(rdf::dataset_isomorphic(hexagon, rotated));
    const auto bijection = rdf::find_blank_node_bijection(hexagon, rotated);
    REQUIRE(bijection.has_value());
    CHECK(hexagon.map_blank_nodes([&](const Term& t) { return bijection->at(t); }) == rotated);
  }

  TEST_CASE("prefixes and labels do not matter, terms do") {
    rdf::Dataset a;
    a.add(Term::blank("x"), ex("p"), Term::literal("1"));
    rdf::Dataset b;
    b.set_prefix("ex", "http://example.org/");
    b.add(Term::blank("y"), ex("p"), Term::literal("1"));
    CHECK(rdf::dataset_isomorphic(a, b));
    rdf::Dataset c;
    c.add(Term::blank("y"), ex("p"), Term::literal("01"));
    CHECK_FALSE(rdf::dataset_isomorphic(a, c));
  }

  TEST_CASE("complexity limit") {
    rdf::Dataset a;
    for (int i = 0; i < 80; ++i) a.add(Term::blank("n" + std::to_string(i)), ex("p"), Term::blank("m" + std::to_string(i)));
    std::mt19937_64 rng(1);
    const auto b = testing::shuffle_labels(a, rng);
    CHECK_THROWS_AS(rdf::dataset_isomorphic(a, b, {.maxAmbiguousBlankNodes = 8}), ComplexityLimitError);
  }
}
