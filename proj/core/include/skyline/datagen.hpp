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

#include <cstdint>

#include "skyline/catalog.hpp"

namespace skyline {

enum class GenValueKind : uint8_t { Int, Float };

/// Synthetic dataset described by its size, dimensionality, value kind,
/// per-dimension null rate and seed. Generation is fully deterministic from
/// the seed: the same spec always yields byte-identical CSV output.
struct GenSpec {
  uint64_t n = 0;
  unsigned d = 1;
  GenValueKind value_kind = GenValueKind::Int;
  double null_rate = 0.0;  // in [0, 1)
  uint64_t seed = 0;

  void validate() const;
};

/// Generates one key column "id" plus skyline-value columns "d1".."dN" with
/// uniform independent values (ints in [0, 10000), floats in [0, 1)) and
/// independent nulls at `null_rate` per dimension. When null_rate is zero
/// the dimension columns are marked non-nullable.
Dataset generate_dataset(const GenSpec &spec);

}  // namespace skyline
