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

#include "graph_access.hpp"
#include "rbkit/error.hpp"
#include "rbkit/package/package.hpp"
#include "rbkit/package/sha256.hpp"
#include "rbkit/package/tar.hpp"
#include "rbkit/rdf/serializer.hpp"

namespace rbkit::package {

namespace {

std::string cap_label(std::optional<std::uint64_t> cap) {
  return cap ? std::to_string(*cap) : "full";
}

std::string padded(std::size_t index, std::size_t width) {
  std::string s = std::to_string(index);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

PackagedFile make_file(DistributionKind kind, std::optional<std::uint64_t> cap,
                       rdf::Format format, std::string content) {
  Distribution d{
      .kind = kind,
      .format = format,
      .sizeCap = cap,
      .byteSize = content.size(),
      .sha256 = sha256_hex(content),
      .fileName = distribution_file_name(kind, cap, format),
  };
  return {std::move(d), std::move(content)};
}

}  // namespace

std::string distribution_iri(const rdf::Iri& dataset, const std::string& fileName) {
  const std::string& base = dataset.str();
  return base + (base.ends_with('/') ? "" : "/") + "files/" + fileName;
}

std::string distribution_file_name(DistributionKind kind, std::optional<std::uint64_t> cap,
                                   rdf::Format format) {
  const std::string ext(rdf::extension(format));
  if (kind == DistributionKind::Flat) return "flat_" + cap_label(cap) + "." + ext;
  return "stream_" + cap_label(cap) + "." + ext + ".tar";
}

std::vector<PackagedFile> build_distributions(const SourceDataset& src,
                                              const std::vector<std::uint64_t>& ladder,
                                              const std::vector<rdf::Format>& formats) {
  const std::size_t n = src.elements.size();
  const bool namedGraphs = std::ranges::any_of(
      src.elements, [](const SourceElement& e) { return e.data.has_named_graphs(); });

  std::vector<std::optional<std::uint64_t>> caps;
  for (auto c : ladder) {
    if (c < n) caps.emplace_back(c);
  }
  caps.emplace_back(std::nullopt);

  const std::size_t width = std::max<std::size_t>(4, std::to_string(n).size());
  std::vector<PackagedFile> out;
  for (const auto format : formats) {
    if (namedGraphs && !rdf::supports_named_graphs(format)) {
      throw FormatCapabilityError("the source uses named graphs, which " +
                                  std::string(rdf::name(format)) + " cannot express");
    }
    std::vector<std::string> flatParts(n);
    std::vector<TarMember> members(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& data = src.elements[i].data;
      flatParts[i] = rdf::serialize_document(data, format, {.blankPrefix = "e" + std::to_string(i) + "_b"});
      members[i] = {padded(i, width) + "." + std::string(rdf::extension(format)),
                    rdf::serialize_document(data, format)};
    }
    for (const auto& cap : caps) {
      const std::size_t take = cap ? static_cast<std::size_t>(*cap) : n;
      std::string flat;
      for (std::size_t i = 0; i < take; ++i) flat += flatParts[i];
      out.push_back(make_file(DistributionKind::Flat, cap, format, std::move(flat)));
      std::vector<TarMember> subset(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
      out.push_back(make_file(DistributionKind::Stream, cap, format, write_tar(subset)));
    }
  }
  return out;
}

rdf::Dataset to_rdf(const std::vector<Distribution>& distributions, const rdf::Iri& dataset,
                    const Vocabulary& vocab) {
  using rdf::Term;
  rdf::Dataset g;
  g.set_prefix("rb", vocab.ns);
  g.set_prefix("xsd", std::string(rdf::ns::xsd));
  const Term s = Term::iri(dataset);
  const auto count = [](std::uint64_t v) { return Term::literal(std::to_string(v), rdf::xsd::integer); };
  for (const auto& d : distributions) {
    const Term node = Term::iri(distribution_iri(dataset, d.fileName));
    g.add(s, vocab.distribution, node);
    g.add(node, Term::iri(rdf::rdfns::type), vocab.Distribution);
    g.add(node, vocab.distributionKind, d.kind == DistributionKind::Flat ? vocab.Flat : vocab.Stream);
    g.add(node, vocab.mediaType, Term::literal(std::string(rdf::media_type(d.format))));
    if (d.sizeCap) g.add(node, vocab.sizeCap, count(*d.sizeCap));
    g.add(node, vocab.byteSize, count(d.byteSize));
    g.add(node, vocab.sha256, Term::literal(d.sha256));
    g.add(node, vocab.fileName, Term::literal(d.fileName));
  }
  return g;
}

std::vector<Distribution> distributions_from_rdf(const rdf::Dataset& graph, const rdf::Iri& dataset,
                                                 const Vocabulary& vocab) {
  std::vector<Distribution> out;
  for (const auto& node : graph.objects(rdf::Term::iri(dataset), vocab.distribution)) {
    Distribution d;
    const auto kind = detail::required_value(graph, node, vocab.distributionKind, "distributionKind");
    if (kind == vocab.Flat) {
      d.kind = DistributionKind::Flat;
    } else if (kind == vocab.Stream) {
      d.kind = DistributionKind::Stream;
    } else {
      throw TypeMismatchError("distributionKind", "unknown kind " + kind.nt());
    }
    const auto media = detail::required_literal(graph, node, vocab.mediaType, "mediaType");
    const auto format = rdf::format_from_media_type(media);
    if (!format) throw TypeMismatchError("mediaType", "unknown media type " + media);
    d.format = *format;
    if (auto cap = detail::single_value(graph, node, vocab.sizeCap, "sizeCap")) {
      d.sizeCap = detail::count_value(*cap, "sizeCap");
    }
    d.byteSize = detail::required_count(graph, node, vocab.byteSize, "byteSize");
    d.sha256 = detail::required_literal(graph, node, vocab.sha256, "sha256");
    d.fileName = detail::required_literal(graph, node, vocab.fileName, "fileName");
    out.push_back(std::move(d));
  }
  std::ranges::sort(out, {}, &Distribution::fileName);
  return out;
}

}  // namespace rbkit::package
