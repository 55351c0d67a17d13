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
#include "skyline/dominance.hpp"

namespace skyline {

DominanceOutcome dominates_complete(const Row &r, const Row &s, const SkylineSpec &spec) {
  bool left_strict = false;
  bool right_strict = false;
  for (const auto &dim : spec.dims) {
    const Value &a = r.values[dim.column];
    const Value &b = s.values[dim.column];
    if (a.is_null() || b.is_null()) {
      throw EngineDefect(
          "null value in a skyline dimension reached the complete dominance test; "
          "either the planner failed to select the incomplete algorithm or the query "
          "asserted COMPLETE on data that contains nulls");
    }
    switch (compare_values(a, b, dim.kind)) {
      case ValueOrder::Equal:
        break;
      case ValueOrder::Better:
        left_strict = true;
        break;
      case ValueOrder::Worse:
        right_strict = true;
        break;
      case ValueOrder::Incomparable:
        // DIFF dimension with unequal values: neither side can dominate.
        return DominanceOutcome::Incomparable;
    }
    if (left_strict && right_strict) {
      return DominanceOutcome::Incomparable;
    }
  }
  if (left_strict) {
    return DominanceOutcome::LeftDominates;
  }
  if (right_strict) {
    return DominanceOutcome::RightDominates;
  }
  return DominanceOutcome::Equivalent;
}

DominanceOutcome dominates_incomplete(const Row &r, const Row &s, const SkylineSpec &spec) {
  bool left_strict = false;
  bool right_strict = false;
  bool any_common = false;
  for (const auto &dim : spec.dims) {
    const Value &a = r.values[dim.column];
    const Value &b = s.values[dim.column];
    if (a.is_null() || b.is_null()) {
      continue;  // comparison is restricted to mutually non-null dims
    }
    any_common = true;
    switch (compare_values(a, b, dim.kind)) {
      case ValueOrder::Equal:
        break;
      case ValueOrder::Better:
        left_strict = true;
        break;
      case ValueOrder::Worse:
        right_strict = true;
        break;
      case ValueOrder::Incomparable:
        return DominanceOutcome::Incomparable;
    }
    if (left_strict && right_strict) {
      return DominanceOutcome::Incomparable;
    }
  }
  if (!any_common) {
    return DominanceOutcome::Incomparable;
  }
  if (left_strict) {
    return DominanceOutcome::LeftDominates;
  }
  if (right_strict) {
    return DominanceOutcome::RightDominates;
  }
  return DominanceOutcome::Equivalent;
}

}  // namespace skyline
