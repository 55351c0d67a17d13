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
#include <cstdint>

#include "skyline/skyline_spec.hpp"

namespace skyline {

/// Four-way outcome of one pairwise dominance test. A single evaluation
/// serves both directions, which halves the comparisons in the BNL window
/// loop.
enum class DominanceOutcome : uint8_t {
  LeftDominates,
  RightDominates,
  Equivalent,
  Incomparable,
};

/// Per-worker instrumentation for one query execution. `dominance_tests`
/// counts pairwise dominance evaluations; shards are merged by summation
/// after the parallel phase, so no synchronization is ever needed.
///
/// The optional deadline makes long scans abandonable: algorithms call
/// `check_budget()` once per outer-loop row and raise TimeoutError past the
/// deadline. The default deadline is "never".
struct CheckCounter {
  uint64_t dominance_tests = 0;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();

  void check_budget() const {
    if (deadline != std::chrono::steady_clock::time_point::max() &&
        std::chrono::steady_clock::now() > deadline) {
      throw TimeoutError("execution exceeded its time budget");
    }
  }

  void merge(const CheckCounter &other) { dominance_tests += other.dominance_tests; }
};

/// Dominance test for complete data: LeftDominates iff r is equal on all
/// DIFF dims, at least as good on all MIN/MAX dims and strictly better in
/// one. Scanning stops at the first pair of dims where each side is
/// strictly better in a different direction. A null in any skyline
/// dimension is an engine defect here; nullable data must be routed to
/// dominates_incomplete by the planner.
DominanceOutcome dominates_complete(const Row &r, const Row &s, const SkylineSpec &spec);

/// Dominance test for incomplete data: same as dominates_complete but
/// restricted to the dimensions where both rows are non-null. An empty
/// common dimension set is Incomparable: with no shared MIN/MAX dimension
/// the "strictly better somewhere" clause can never hold.
DominanceOutcome dominates_incomplete(const Row &r, const Row &s, const SkylineSpec &spec);

}  // namespace skyline
