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

#include <iosfwd>

#include "skyline/datagen.hpp"
#include "skyline/physical_planner.hpp"

namespace skyline {

/// One benchmark measurement: the cell coordinates plus the median wall
/// time over the repeats. A timed-out cell reports the elapsed time of the
/// aborted run (>= the budget); a cell the planner rejects carries the
/// message in `error`.
struct BenchRecord {
  std::string algorithm;
  uint64_t n = 0;
  unsigned d = 1;
  unsigned workers = 1;
  double wall_ms = 0.0;
  uint64_t dominance_tests = 0;
  uint64_t skyline_size = 0;
  bool timed_out = false;
  std::string error;
};

/// Cartesian benchmark matrix over generated data. One dataset is generated
/// per (n, d) pair and shared by every algorithm and worker count, so
/// result sizes are comparable across a cell's rows.
struct BenchMatrix {
  std::vector<uint64_t> n_list;
  std::vector<unsigned> d_list;
  std::vector<unsigned> workers_list;
  std::vector<AlgorithmChoice> algorithms;
  double timeout_seconds = 300.0;
  unsigned repeats = 3;
  GenValueKind value_kind = GenValueKind::Int;
  double null_rate = 0.0;
  uint64_t seed = 0;
};

/// The query a bench cell runs for dimensionality d: skyline over d1..dd
/// with alternating MIN/MAX.
std::string bench_query(unsigned d);

/// Runs every cell sequentially (timings must not contend with each other);
/// within a cell the engine parallelizes per the worker count. A run is cut
/// off cooperatively once it exceeds the timeout and the cell is recorded as
/// timed out; remaining repeats of that cell are skipped.
std::vector<BenchRecord> run_bench(const BenchMatrix &matrix, std::ostream *progress = nullptr);

void write_bench_csv(const std::vector<BenchRecord> &records, std::ostream &out);

}  // namespace skyline
