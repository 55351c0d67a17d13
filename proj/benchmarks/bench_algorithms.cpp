/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include "skyline/algorithms.hpp"
#include "skyline/datagen.hpp"
#include "skyline/executor.hpp"

namespace {

using namespace skyline;

SkylineSpec alternating_spec(unsigned d) {
  SkylineSpec spec;
  for (unsigned i = 0; i < d; ++i) {
    spec.dims.push_back({i + 1, i % 2 == 0 ? DimKind::Min : DimKind::Max});  // skip the key column
  }
  return spec;
}

Dataset make_data(uint64_t n, unsigned d, double null_rate) {
  GenSpec gen;
  gen.n = n;
  gen.d = d;
  gen.null_rate = null_rate;
  gen.seed = 7;
  return generate_dataset(gen);
}

void BM_BnlSkyline(benchmark::State &state) {
  Dataset data = make_data(static_cast<uint64_t>(state.range(0)), 4, 0.0);
  SkylineSpec spec = alternating_spec(4);
  for (auto _ : state) {
    CheckCounter counter;
    benchmark::DoNotOptimize(bnl_skyline(data.rows, spec, counter));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BnlSkyline)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ReferenceSkyline(benchmark::State &state) {
  Dataset data = make_data(static_cast<uint64_t>(state.range(0)), 4, 0.0);
  SkylineSpec spec = alternating_spec(4);
  for (auto _ : state) {
    CheckCounter counter;
    benchmark::DoNotOptimize(reference_skyline(data.rows, spec, counter));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReferenceSkyline)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_CompletePipeline(benchmark::State &state) {
  Dataset data = make_data(100000, 4, 0.0);
  SkylineSpec spec = alternating_spec(4);
  unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    CheckCounter counter;
    auto chunks = split_unspecified(data.rows, workers);
    auto locals = local_skylines_complete(chunks, spec, counter, workers);
    std::vector<Row> local_union;
    for (auto &local : locals) {
      for (auto &row : local) {
        local_union.push_back(std::move(row));
      }
    }
    benchmark::DoNotOptimize(global_skyline_complete(local_union, spec, counter));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_CompletePipeline)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IncompletePipeline(benchmark::State &state) {
  Dataset data = make_data(static_cast<uint64_t>(state.range(0)), 4, 0.3);
  SkylineSpec spec = alternating_spec(4);
  for (auto _ : state) {
    CheckCounter counter;
    auto partitions = partition_by_null_signature(data.rows, spec);
    auto locals = local_skylines_incomplete(partitions, spec, counter, 4);
    std::vector<Row> local_union;
    for (auto &local : locals) {
      for (auto &row : local) {
        local_union.push_back(std::move(row));
      }
    }
    benchmark::DoNotOptimize(global_skyline_incomplete(local_union, spec, counter));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IncompletePipeline)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
