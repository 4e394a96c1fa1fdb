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

#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "rbkit/rdf/isomorphism.hpp"
#include "rbkit/rdf/parser.hpp"
#include "rbkit/rdf/serializer.hpp"

using namespace rbkit;

namespace {

// A chain of typed observations: n subjects, four statements each.
rdf::Dataset observations(std::size_t n, bool blank) {
  rdf::Dataset d;
  const auto p = [](const char* local) { return rdf::Term::iri(std::string("http://example.org/") + local); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = blank ? rdf::Term::blank("o" + std::to_string(i))
                         : rdf::Term::iri("http://example.org/obs/" + std::to_string(i));
    d.add(s, rdf::Term::iri(rdf::rdfns::type), p("Observation"));
    d.add(s, p("value"), rdf::Term::integer(static_cast<std::int64_t>(i % 97)));
    d.add(s, p("label"), rdf::Term::lang_literal("reading " + std::to_string(i), "en"));
    if (i > 0) {
      const auto prev = blank ? rdf::Term::blank("o" + std::to_string(i - 1))
                              : rdf::Term::iri("http://example.org/obs/" + std::to_string(i - 1));
      d.add(s, p("after"), prev);
    }
  }
  return d;
}

void BM_Serialize(benchmark::State& state, rdf::Format format) {
  const auto d = observations(static_cast<std::size_t>(state.range(0)), false);
  std::size_t bytes = 0;
  for (auto _ : state) {
    auto text = rdf::serialize_document(d, format);
    bytes += text.size();
    benchmark::DoNotOptimize(text);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}

void BM_Parse(benchmark::State& state, rdf::Format format) {
  const auto text = rdf::serialize_document(observations(static_cast<std::size_t>(state.range(0)), false), format);
  for (auto _ : state) benchmark::DoNotOptimize(rdf::parse_document(text, format));
  state.SetBytesProcessed(static_cast<std::int64_t>(text.size() * state.iterations()));
}

void BM_IsomorphicBlankChain(benchmark::State& state) {
  const auto a = observations(static_cast<std::size_t>(state.range(0)), true);
  std::mt19937_64 rng(1);
  const auto b = testing::shuffle_labels(a, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rdf::dataset_isomorphic(a, b));
}

void BM_IsomorphicGenerated(benchmark::State& state) {
  testing::DatasetGenerator gen(5);
  std::vector<std::pair<rdf::Dataset, rdf::Dataset>> pairs;
  for (int i = 0; i < 64; ++i) {
    auto a = gen.next({.maxQuads = 10, .maxBlankNodes = 6, .namedGraphs = true});
    auto b = testing::shuffle_labels(a, gen.rng());
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(rdf::dataset_isomorphic(a, b));
  }
}

void BM_Canonicalize(benchmark::State& state) {
  const auto d = observations(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(rdf::canonicalize(d));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serialize, nquads, rdf::Format::NQuads)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Serialize, turtle, rdf::Format::Turtle)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Parse, nquads, rdf::Format::NQuads)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Parse, turtle, rdf::Format::Turtle)->Range(64, 4096);
BENCHMARK(BM_IsomorphicBlankChain)->Range(16, 1024);
BENCHMARK(BM_IsomorphicGenerated);
BENCHMARK(BM_Canonicalize)->Range(16, 1024);
