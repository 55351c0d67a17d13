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

#include <map>
#include <span>
#include <vector>

#include "skyline/dominance.hpp"

namespace skyline {

/// Per-row bit pattern over the skyline dimensions: bit i is set iff the row
/// is null in skyline dimension i. Rows with equal signatures form one
/// partition of the incomplete algorithm; within a partition all comparisons
/// use the same dimension subset, which restores transitivity.
struct NullSignature {
  uint64_t bits = 0;
  auto operator<=>(const NullSignature &) const = default;
};

NullSignature null_signature(const Row &row, const SkylineSpec &spec);

/// Block-Nested-Loop skyline for complete data. Keeps a window of candidate
/// tuples; an incoming tuple dominated by the window is dropped without
/// scanning further (transitivity guarantees it cannot evict anything), an
/// incoming tuple that dominates window tuples evicts them. Equivalent rows
/// are both kept unless `spec.distinct`, in which case the earlier (lower
/// ordinal) row wins. Survivors come out in input order.
std::vector<Row> bnl_skyline(std::span<const Row> rows, const SkylineSpec &spec,
                             CheckCounter &counter);

/// Element-wise bnl_skyline over the given partitions, on up to `workers`
/// concurrent threads. Each partition computes into its own slot with its
/// own counter shard, so results and counts are independent of scheduling.
std::vector<std::vector<Row>> local_skylines_complete(
    const std::vector<std::span<const Row>> &partitions, const SkylineSpec &spec,
    CheckCounter &counter, unsigned workers = 1);

/// Global phase of the complete pipeline: plain BNL over the concatenated
/// local skylines, single worker.
std::vector<Row> global_skyline_complete(std::span<const Row> local_union,
                                         const SkylineSpec &spec, CheckCounter &counter);

/// Exact partition of the input by null signature; input order is preserved
/// within each partition, and the map iterates in ascending signature order.
std::map<NullSignature, std::vector<Row>> partition_by_null_signature(std::span<const Row> rows,
                                                                      const SkylineSpec &spec);

/// Local skylines of the signature partitions, using the incomplete
/// dominance test (safe: within a partition transitivity holds). Results
/// come back in ascending signature order.
std::vector<std::vector<Row>> local_skylines_incomplete(
    const std::map<NullSignature, std::vector<Row>> &partitions, const SkylineSpec &spec,
    CheckCounter &counter, unsigned workers = 1);

/// Global phase of the incomplete pipeline. Dominance relationships may be
/// cyclic here, so this is an all-pairs pass that only marks dominated rows
/// and deletes them after every pair has been examined; deleting early could
/// erase the only witness against another tuple. DISTINCT is applied
/// afterward on exact skyline-dimension equality, lowest ordinal wins.
std::vector<Row> global_skyline_incomplete(std::span<const Row> local_union,
                                           const SkylineSpec &spec, CheckCounter &counter);

/// The incorrect prior-art algorithm for incomplete data: local skyline per
/// cluster, then a sweep over clusters that eliminates dominated tuples of
/// *later* clusters immediately instead of deferring deletion. Retained only
/// as a regression witness for the cyclic-dominance counterexample; the
/// planner never selects it.
std::vector<Row> flawed_global_incomplete(const std::vector<std::vector<Row>> &clusters,
                                          const SkylineSpec &spec);

/// Direct realization of the NOT EXISTS rewriting: r survives iff no s
/// dominates r. Quadratic; serves as the correctness oracle and the
/// performance baseline for every other strategy. Uses the incomplete
/// dominance test iff a null actually occurs in some skyline dimension.
std::vector<Row> reference_skyline(std::span<const Row> rows, const SkylineSpec &spec,
                                   CheckCounter &counter);

/// Collapses rows that are exactly equal on every skyline dimension (null
/// compares equal to null here) to the lowest-ordinal representative,
/// preserving the order of survivors.
std::vector<Row> distinct_post_pass(std::vector<Row> rows, const SkylineSpec &spec);

}  // namespace skyline
