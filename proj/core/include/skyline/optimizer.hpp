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

#include "skyline/plan.hpp"

namespace skyline {

/// Rule-based logical rewrites. The only rule is the single-dimension one:
/// a skyline over exactly one MIN or MAX dimension is just the scalar
/// optimum, so the node collapses to a two-pass extreme scan (find the
/// extreme, filter equals) that runs in O(n) with zero dominance tests.
///
/// The rule fires only when the complete path would be chosen (COMPLETE set
/// or the dimension non-nullable): under incomplete semantics a row that is
/// null in the dimension is incomparable to everything and belongs in the
/// skyline, which the extreme scan would wrongly drop.
///
/// Plans without a skyline node pass through untouched.
std::unique_ptr<LogicalNode> optimize(std::unique_ptr<LogicalNode> plan, const Schema &schema);

}  // namespace skyline
