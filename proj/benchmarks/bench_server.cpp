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

#include "rbkit/server/negotiation.hpp"
#include "rbkit/server/redirects.hpp"
#include "rbkit/server/snapshot.hpp"
#include "rbkit/sitegen/site.hpp"

using namespace rbkit;

namespace {

void BM_ChooseMediaType(benchmark::State& state) {
  const std::string accept = "text/html;q=0.9, application/xhtml+xml;q=0.8, text/turtle, application/*;q=0.5, */*;q=0.1";
  for (auto _ : state) benchmark::DoNotOptimize(server::choose_media_type(accept, server::offered_media_types()));
}

void BM_ResolvePurl(benchmark::State& state) {
  const auto table = server::RedirectTable::parse(sitegen::default_redirects());
  const std::vector<std::string> paths{"/", "/datasets/sensor", "/v/dev/tasks/rdf-patch", "/results/r01",
                                       "/profiles/flat/1.0", "/nothing/here/at/all"};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(table.try_resolve(paths[i++ % paths.size()], "1.0"));
}

void BM_ParseRedirectTable(benchmark::State& state) {
  const auto text = sitegen::default_redirects();
  for (auto _ : state) benchmark::DoNotOptimize(server::RedirectTable::parse(text));
}

}  // namespace

BENCHMARK(BM_ChooseMediaType);
BENCHMARK(BM_ResolvePurl);
BENCHMARK(BM_ParseRedirectTable);
