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
#include "skyline/datagen.hpp"

#include <random>

#include "skyline/error.hpp"

namespace skyline {

void GenSpec::validate() const {
  if (n < 1 || d < 1) {
    throw ExecError("data generation requires n >= 1 and d >= 1");
  }
  if (null_rate < 0.0 || null_rate >= 1.0) {
    throw ExecError("null rate must lie in [0, 1)");
  }
  if (d > 64) {
    throw ExecError("at most 64 dimensions are supported");
  }
}

namespace {

// Engine-independent derivations so generated data is stable across
// platforms and standard library versions.
double unit_float(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int64_t uniform_int(std::mt19937_64 &rng, int64_t bound) {
  return static_cast<int64_t>(rng() % static_cast<uint64_t>(bound));
}

}  // namespace

Dataset generate_dataset(const GenSpec &spec) {
  spec.validate();

  std::vector<ColumnType> columns;
  columns.push_back({"id", ValueKind::Int, false});
  for (unsigned i = 1; i <= spec.d; ++i) {
    ColumnType ct;
    ct.name = "d" + std::to_string(i);
    ct.kind = spec.value_kind == GenValueKind::Int ? ValueKind::Int : ValueKind::Float;
    ct.nullable = spec.null_rate > 0.0;
    columns.push_back(std::move(ct));
  }

  Dataset dataset;
  dataset.schema = Schema(std::move(columns));
  dataset.rows.reserve(spec.n);

  std::mt19937_64 rng(spec.seed);
  for (uint64_t i = 0; i < spec.n; ++i) {
    Row row;
    row.ordinal = i;
    row.values.reserve(spec.d + 1);
    row.values.push_back(Value::integer(static_cast<int64_t>(i)));
    for (unsigned dim = 0; dim < spec.d; ++dim) {
      bool is_null = spec.null_rate > 0.0 && unit_float(rng) < spec.null_rate;
      if (is_null) {
        row.values.push_back(Value::null());
      } else if (spec.value_kind == GenValueKind::Int) {
        row.values.push_back(Value::integer(uniform_int(rng, 10000)));
      } else {
        row.values.push_back(Value::floating(unit_float(rng)));
      }
    }
    dataset.rows.push_back(std::move(row));
  }
  return dataset;
}

}  // namespace skyline
