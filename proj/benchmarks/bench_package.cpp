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

#include "rbkit/package/package.hpp"
#include "rbkit/package/sha256.hpp"
#include "rbkit/package/tar.hpp"

using namespace rbkit;

namespace {

package::SourceDataset stream(std::size_t elements, std::size_t statements) {
  package::SourceDataset src;
  for (std::size_t e = 0; e < elements; ++e) {
    package::SourceElement el;
    char name[32];
    std::snprintf(name, sizeof name, "%04zu.ttl", e);
    el.fileName = name;
    for (std::size_t s = 0; s < statements; ++s) {
      el.data.add(rdf::Term::iri("http://example.org/sensor/" + std::to_string(s)),
                  rdf::Term::iri("http://example.org/reading"),
                  rdf::Term::integer(static_cast<std::int64_t>(e * statements + s)));
    }
    src.elements.push_back(std::move(el));
  }
  return src;
}

void BM_Sha256(benchmark::State& state) {
  const std::string data(static_cast<std::size_t>(state.range(0)), 'x');
  for (auto _ : state) benchmark::DoNotOptimize(package::sha256_hex(data));
  state.SetBytesProcessed(static_cast<std::int64_t>(data.size() * state.iterations()));
}

void BM_WriteTar(benchmark::State& state) {
  std::vector<package::TarMember> members;
  for (int i = 0; i < state.range(0); ++i) members.push_back({std::to_string(i) + ".nq", std::string(300, 'q')});
  for (auto _ : state) benchmark::DoNotOptimize(package::write_tar(members));
}

void BM_Statistics(benchmark::State& state) {
  const auto src = stream(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(package::compute_statistics(src));
}

void BM_BuildDistributions(benchmark::State& state) {
  const auto src = stream(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(package::build_distributions(src, {10, 100, 1000}, {rdf::Format::NQuads}));
  }
}

}  // namespace

BENCHMARK(BM_Sha256)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_WriteTar)->Range(8, 1024);
BENCHMARK(BM_Statistics)->Range(16, 2048);
BENCHMARK(BM_BuildDistributions)->Range(16, 2048);
