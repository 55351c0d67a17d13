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
#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skyline/catalog.hpp"
#include "skyline/plan.hpp"

namespace skyline {

/// Execution configuration. `workers` is the number of concurrent threads
/// for the local skyline phase; `partitions` is how many chunks the data is
/// split into (defaults to `workers`). The SKYLINE_THREADS environment
/// variable caps the effective worker count. `rng_seed` is reserved for
/// future randomized operators; nothing in execution draws randomness today.
struct ExecConfig {
  unsigned workers = 1;
  std::optional<unsigned> partitions;
  uint64_t rng_seed = 0;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();

  unsigned effective_workers() const;
  unsigned effective_partitions() const {
    return partitions.value_or(std::max(1u, workers));
  }
};

struct StageTiming {
  std::string name;
  double millis = 0.0;
};

struct ExecStats {
  std::string algorithm;            // skyline strategy that actually ran, if any
  uint64_t rows_in = 0;             // rows entering the skyline stage
  uint64_t rows_out = 0;            // rows produced by the query
  uint64_t dominance_tests = 0;     // summed over all counter shards
  uint64_t local_partitions = 0;    // chunks or null-signature partitions (0: no local phase)
  uint64_t local_output_rows = 0;   // rows entering the global phase
  unsigned workers = 0;
  double skyline_local_ms = 0.0;
  double skyline_global_ms = 0.0;
  double total_ms = 0.0;
  std::vector<StageTiming> stages;

  std::string to_string() const;
};

struct ExecResult {
  Dataset data;
  ExecStats stats;
};

/// Near-equal contiguous chunks (sizes differ by at most one), preserving
/// input order; stands in for an unspecified distribution. Empty chunks are
/// legal when k exceeds the row count.
std::vector<std::span<const Row>> split_unspecified(std::span<const Row> rows, size_t k);

/// Evaluates a physical plan bottom-up against the catalog. The local
/// skyline phase runs its partitions on up to `config.workers` threads; the
/// global phase, planning and ingestion are single-threaded. Output is
/// deterministic: the same inputs and config produce identical rows in
/// identical order regardless of scheduling.
ExecResult execute(const PhysicalNode &plan, const Catalog &catalog, const ExecConfig &config);

}  // namespace skyline
