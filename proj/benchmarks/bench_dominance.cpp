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

#include <random>

#include "skyline/dominance.hpp"

namespace {

using namespace skyline;

std::vector<Row> random_rows(size_t n, unsigned d, double null_rate, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  rows.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Row row;
    row.ordinal = i;
    for (unsigned dim = 0; dim < d; ++dim) {
      bool is_null = null_rate > 0 && (rng() % 1000) < null_rate * 1000;
      row.values.push_back(is_null ? Value::null()
                                   : Value::integer(static_cast<int64_t>(rng() % 10000)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SkylineSpec mixed_spec(unsigned d) {
  SkylineSpec spec;
  for (unsigned i = 0; i < d; ++i) {
    spec.dims.push_back({i, i % 2 == 0 ? DimKind::Min : DimKind::Max});
  }
  return spec;
}

void BM_DominatesComplete(benchmark::State &state) {
  unsigned d = static_cast<unsigned>(state.range(0));
  auto rows = random_rows(1024, d, 0.0, 1);
  SkylineSpec spec = mixed_spec(d);
  size_t i = 0;
  for (auto _ : state) {
    const Row &r = rows[i & 1023];
    const Row &s = rows[(i * 7 + 13) & 1023];
    benchmark::DoNotOptimize(dominates_complete(r, s, spec));
    ++i;
  }
}
BENCHMARK(BM_DominatesComplete)->Arg(2)->Arg(4)->Arg(6);

void BM_DominatesIncomplete(benchmark::State &state) {
  unsigned d = static_cast<unsigned>(state.range(0));
  auto rows = random_rows(1024, d, 0.3, 2);
  SkylineSpec spec = mixed_spec(d);
  size_t i = 0;
  for (auto _ : state) {
    const Row &r = rows[i & 1023];
    const Row &s = rows[(i * 7 + 13) & 1023];
    benchmark::DoNotOptimize(dominates_incomplete(r, s, spec));
    ++i;
  }
}
BENCHMARK(BM_DominatesIncomplete)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
