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

#include <charconv>
#include <cstdio>
#include <set>

#include "graph_access.hpp"
#include "rbkit/error.hpp"
#include "rbkit/nanopub/nanopub.hpp"
#include "rbkit/orcid.hpp"

namespace rbkit::nanopub {

using rdf::Term;

namespace {

Term type_term() { return Term::iri(rdf::rdfns::type); }

Term report_subject(const rdf::Dataset& assertion, const Vocabulary& vocab) {
  const auto subjects = assertion.subjects(type_term(), vocab.BenchmarkRunReport);
  if (subjects.empty()) throw MissingFieldError("type");
  if (subjects.size() > 1) throw TypeMismatchError("type", "several benchmark run reports in one assertion");
  return subjects.front();
}

std::vector<EvaluatedSystem> read_systems(const rdf::Dataset& g, const Term& report,
                                          const Vocabulary& vocab) {
  const Term first = Term::iri(rdf::rdfns::first);
  const Term rest = Term::iri(rdf::rdfns::rest);
  const Term nil = Term::iri(rdf::rdfns::nil);

  std::vector<EvaluatedSystem> out;
  std::set<Term> seen;
  Term cell = detail::required_value(g, report, vocab.evaluatedSystems, "systems");
  while (cell != nil) {
    if (cell.is_literal() || !seen.insert(cell).second) {
      throw TypeMismatchError("systems", "evaluated systems must be a well-formed RDF list");
    }
    const Term node = detail::required_value(g, cell, first, "systems");
    if (node.is_literal()) throw TypeMismatchError("systems", "list items must be nodes");
    out.push_back({detail::required_literal(g, node, vocab.systemName, "systems"),
                   detail::required_literal(g, node, vocab.systemVersion, "systems")});
    cell = detail::required_value(g, cell, rest, "systems");
  }
  if (out.empty()) throw MissingFieldError("systems");
  return out;
}

std::string read_author(const Nanopublication& np) {
  auto values = np.pubinfo.objects(Term::iri(np.uri), Term::iri(dct::creator));
  if (values.empty()) {
    values = np.provenance.objects(Term::iri(np.assertionGraph), Term::iri(prov::wasAttributedTo));
  }
  if (values.empty()) throw MissingFieldError("authorOrcid");
  if (values.size() > 1) throw TypeMismatchError("authorOrcid", "expected one author");
  const auto orcid = Orcid::parse(values.front().value());
  if (!orcid) throw TypeMismatchError("authorOrcid", "not a valid ORCID iD: " + values.front().value());
  return orcid->str();
}

std::string graph_iri(const rdf::Iri& base, std::string_view local) {
  const std::string& b = base.str();
  const bool bare = b.ends_with('/') || b.ends_with('#');
  return b + (bare ? "" : "/") + std::string(local);
}

void require_text(const std::string& value, const char* field) {
  if (value.empty()) throw MissingFieldError(field);
}

}  // namespace

std::string format_date(const std::chrono::year_month_day& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::optional<std::chrono::year_month_day> parse_date(std::string_view text) {
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (text.size() > 10 && text[10] != 'T' && text[10] != 'Z' && text[10] != '+' && text[10] != '-') {
    return std::nullopt;
  }
  int y = 0;
  unsigned m = 0, d = 0;
  const auto field = [&](std::size_t at, std::size_t len, auto& out) {
    const char* b = text.data() + at;
    auto [p, ec] = std::from_chars(b, b + len, out);
    return ec == std::errc() && p == b + len;
  };
  if (!field(0, 4, y) || !field(5, 2, m) || !field(8, 2, d)) return std::nullopt;
  const std::chrono::year_month_day date{std::chrono::year(y), std::chrono::month(m),
                                         std::chrono::day(d)};
  if (!date.ok()) return std::nullopt;
  return date;
}

BenchmarkRunReport extract_report(const Nanopublication& np, const Vocabulary& vocab) {
  const rdf::Dataset& g = np.assertion;
  const Term r = report_subject(g, vocab);

  BenchmarkRunReport out{
      .reportIri = np.uri,
      .task = detail::required_iri(g, r, vocab.task, "task"),
      .profile = detail::required_iri(g, r, vocab.profile, "profile"),
      .profileVersion = detail::required_literal(g, r, vocab.profileVersion, "profileVersion"),
      .benchmarkCode = detail::required_iri(g, r, vocab.benchmarkCode, "benchmarkCode"),
      .systems = read_systems(g, r, vocab),
      .authorOrcid = read_author(np),
      .date = {},
      .resultsLink = detail::optional_iri(g, r, vocab.resultsLink, "resultsLink"),
  };
  const Term created =
      detail::required_value(np.pubinfo, Term::iri(np.uri), Term::iri(dct::created), "date");
  const auto date = created.is_literal() ? parse_date(created.value()) : std::nullopt;
  if (!date) throw TypeMismatchError("date", "expected an xsd:date, found " + created.nt());
  out.date = *date;
  return out;
}

Nanopublication build_report_nanopub(const BenchmarkRunReport& report,
                                     const std::optional<rdf::Iri>& base, const Vocabulary& vocab) {
  if (report.systems.empty()) throw MissingFieldError("systems");
  for (const auto& s : report.systems) {
    if (s.name.empty() || s.version.empty()) throw MissingFieldError("systems");
  }
  require_text(report.profileVersion, "profileVersion");
  require_text(report.authorOrcid, "authorOrcid");
  const auto orcid = Orcid::parse(report.authorOrcid);
  if (!orcid) throw TypeMismatchError("authorOrcid", "not a valid ORCID iD: " + report.authorOrcid);
  if (!report.date.ok()) throw TypeMismatchError("date", "not a calendar date");

  const rdf::Iri& b = base ? *base : report.reportIri;
  Nanopublication out{
      .uri = report.reportIri,
      .headGraph = rdf::Iri(graph_iri(b, "Head")),
      .assertionGraph = rdf::Iri(graph_iri(b, "assertion")),
      .provenanceGraph = rdf::Iri(graph_iri(b, "provenance")),
      .pubinfoGraph = rdf::Iri(graph_iri(b, "pubinfo")),
      .head = {},
      .assertion = {},
      .provenance = {},
      .pubinfo = {},
  };
  const Term np = Term::iri(out.uri);
  const Term author = Term::iri(orcid->iri());

  out.head.add(np, type_term(), Term::iri(np::Nanopublication));
  out.head.add(np, Term::iri(np::hasAssertion), Term::iri(out.assertionGraph));
  out.head.add(np, Term::iri(np::hasProvenance), Term::iri(out.provenanceGraph));
  out.head.add(np, Term::iri(np::hasPublicationInfo), Term::iri(out.pubinfoGraph));

  auto& a = out.assertion;
  const Term& r = np;
  a.add(r, type_term(), vocab.BenchmarkRunReport);
  a.add(r, vocab.task, Term::iri(report.task));
  a.add(r, vocab.profile, Term::iri(report.profile));
  a.add(r, vocab.profileVersion, Term::literal(report.profileVersion));
  a.add(r, vocab.benchmarkCode, Term::iri(report.benchmarkCode));
  if (report.resultsLink) a.add(r, vocab.resultsLink, Term::iri(*report.resultsLink));
  Term next = Term::iri(rdf::rdfns::nil);
  for (std::size_t i = report.systems.size(); i-- > 0;) {
    const Term node = Term::blank("system" + std::to_string(i));
    a.add(node, type_term(), vocab.EvaluatedSystem);
    a.add(node, vocab.systemName, Term::literal(report.systems[i].name));
    a.add(node, vocab.systemVersion, Term::literal(report.systems[i].version));
    const Term cell = Term::blank("list" + std::to_string(i));
    a.add(cell, Term::iri(rdf::rdfns::first), node);
    a.add(cell, Term::iri(rdf::rdfns::rest), next);
    next = cell;
  }
  a.add(r, vocab.evaluatedSystems, next);

  out.provenance.add(Term::iri(out.assertionGraph), Term::iri(prov::wasAttributedTo), author);
  out.pubinfo.add(np, Term::iri(dct::creator), author);
  out.pubinfo.add(np, Term::iri(dct::created), Term::literal(format_date(report.date), rdf::xsd::date));
  return out;
}

}  // namespace rbkit::nanopub
