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

#include <optional>
#include <string>

#include "skyline/plan.hpp"

namespace skyline {

/// Which skyline strategy the physical plan should use. Auto follows the
/// nullability rule; the forced variants exist so benchmarks can compare
/// the strategies from one code path.
enum class AlgorithmChoice : uint8_t {
  Auto,
  DistributedComplete,
  NondistributedComplete,
  DistributedIncomplete,
  Reference,
};

const char *algorithm_choice_name(AlgorithmChoice choice);
std::optional<AlgorithmChoice> algorithm_choice_from_name(const std::string &name);

/// Lowers a resolved (and possibly optimized) logical plan to a physical
/// plan. In Auto mode the skyline node becomes the complete pipeline
/// (local + global) when COMPLETE is set or no skyline dimension is
/// nullable, and the incomplete pipeline (signature-partitioned local +
/// all-pairs global) otherwise. Forcing a complete variant onto nullable
/// dimensions without COMPLETE is a PlanError: correctness depends on
/// whether nulls actually appear, and only the query's COMPLETE keyword may
/// assert that.
std::unique_ptr<PhysicalNode> select_algorithm(const LogicalNode &plan, const Schema &schema,
                                               AlgorithmChoice mode = AlgorithmChoice::Auto);

}  // namespace skyline
