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

// Test-only brute-force oracle. Deliberately written from the dominance
// definition with none of the engine's short-circuiting, windowing or
// partitioning machinery, so it stays an independent check on all of them.

#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skyline/catalog.hpp"
#include "skyline/skyline_spec.hpp"

namespace skyline::oracle {

inline bool value_lt(const Value &a, const Value &b) {
  switch (a.kind()) {
    case ValueKind::Int: return a.as_int() < b.as_int();
    case ValueKind::Float: return a.as_float() < b.as_float();
    case ValueKind::Bool: return !a.as_bool() && b.as_bool();
    case ValueKind::Text: return a.as_text() < b.as_text();
  }
  return false;
}

/// Definition-level dominance with the incomplete restriction built in: on
/// null-free rows it coincides with the complete definition. Evaluates all
/// clauses without short-circuiting.
inline bool naive_dominates(const Row &r, const Row &s, const SkylineSpec &spec) {
  bool all_weak = true;
  bool any_strict = false;
  bool diff_equal = true;
  bool any_common = false;
  for (const auto &dim : spec.dims) {
    const Value &a = r.values[dim.column];
    const Value &b = s.values[dim.column];
    if (a.is_null() || b.is_null()) {
      continue;
    }
    any_common = true;
    switch (dim.kind) {
      case DimKind::Diff:
        diff_equal = diff_equal && (a == b);
        break;
      case DimKind::Min:
        all_weak = all_weak && !value_lt(b, a);
        any_strict = any_strict || value_lt(a, b);
        break;
      case DimKind::Max:
        all_weak = all_weak && !value_lt(a, b);
        any_strict = any_strict || value_lt(b, a);
        break;
    }
  }
  return any_common && diff_equal && all_weak && any_strict;
}

inline std::string value_key(const Value &v) {
  if (v.is_null()) {
    return "N";
  }
  switch (v.kind()) {
    case ValueKind::Int: return "I:" + v.to_string();
    case ValueKind::Float: return "F:" + v.to_string();
    case ValueKind::Bool: return "B:" + v.to_string();
    case ValueKind::Text: return "T:" + v.to_string();
  }
  return "?";
}

inline std::string skyline_dim_key(const Row &row, const SkylineSpec &spec) {
  std::string key;
  for (const auto &dim : spec.dims) {
    key += value_key(row.values[dim.column]);
    key += '|';
  }
  return key;
}

/// NOT EXISTS semantics straight from the definition, with an optional
/// distinct pass keeping the lowest ordinal of each exact-equality class.
inline std::vector<Row> naive_skyline(std::span<const Row> rows, const SkylineSpec &spec) {
  std::vector<Row> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < rows.size() && !dominated; ++j) {
      if (j != i && naive_dominates(rows[j], rows[i], spec)) {
        dominated = true;
      }
    }
    if (!dominated) {
      out.push_back(rows[i]);
    }
  }
  if (spec.distinct) {
    std::map<std::string, uint64_t> best;
    for (const Row &row : out) {
      std::string key = skyline_dim_key(row, spec);
      auto it = best.find(key);
      if (it == best.end() || row.ordinal < it->second) {
        best[key] = row.ordinal;
      }
    }
    std::vector<Row> deduped;
    for (const Row &row : out) {
      if (best.at(skyline_dim_key(row, spec)) == row.ordinal) {
        deduped.push_back(row);
      }
    }
    out = std::move(deduped);
  }
  return out;
}

inline std::vector<uint64_t> ordinals(std::span<const Row> rows) {
  std::vector<uint64_t> out;
  out.reserve(rows.size());
  for (const Row &row : rows) {
    out.push_back(row.ordinal);
  }
  return out;
}

inline std::set<uint64_t> ordinal_set(std::span<const Row> rows) {
  std::set<uint64_t> out;
  for (const Row &row : rows) {
    out.insert(row.ordinal);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random test data

struct TestData {
  Dataset dataset;
  SkylineSpec spec;
  std::string skyline_clause;  // "c0 MIN, c1 MAX, ..." for query text
};

/// Random dataset plus skyline spec: mixed column types (small-domain ints
/// for ties and meaningful DIFF classes, floats, bools), mixed MIN/MAX/DIFF
/// with at least one ordered dimension, plus one extra non-skyline column.
inline TestData random_test_data(std::mt19937_64 &rng, size_t n, unsigned d, double null_rate,
                                 bool distinct) {
  TestData data;
  data.spec.distinct = distinct;

  std::vector<ColumnType> columns;
  std::vector<int> domains;  // 0: bool, >0: int domain size, -1: float
  for (unsigned i = 0; i < d; ++i) {
    ColumnType ct;
    ct.name = "c" + std::to_string(i);
    switch (rng() % 5) {
      case 0:
        ct.kind = ValueKind::Int;
        domains.push_back(4);
        break;
      case 1:
        ct.kind = ValueKind::Int;
        domains.push_back(10);
        break;
      case 2:
        ct.kind = ValueKind::Int;
        domains.push_back(10000);
        break;
      case 3:
        ct.kind = ValueKind::Float;
        domains.push_back(-1);
        break;
      default:
        ct.kind = ValueKind::Bool;
        domains.push_back(0);
        break;
    }
    ct.nullable = null_rate > 0.0;
    columns.push_back(std::move(ct));
  }
  columns.push_back({"extra", ValueKind::Int, false});

  for (unsigned i = 0; i < d; ++i) {
    SkylineDimension dim;
    dim.column = i;
    switch (rng() % 3) {
      case 0: dim.kind = DimKind::Min; break;
      case 1: dim.kind = DimKind::Max; break;
      default: dim.kind = DimKind::Diff; break;
    }
    data.spec.dims.push_back(dim);
  }
  // At least one ordered dimension is required.
  bool any_ordered = false;
  for (const auto &dim : data.spec.dims) {
    any_ordered = any_ordered || dim.kind != DimKind::Diff;
  }
  if (!any_ordered) {
    data.spec.dims[rng() % d].kind = (rng() % 2 == 0) ? DimKind::Min : DimKind::Max;
  }

  data.dataset.schema = Schema(columns);
  data.dataset.rows.reserve(n);
  for (size_t row_idx = 0; row_idx < n; ++row_idx) {
    Row row;
    row.ordinal = row_idx;
    for (unsigned col = 0; col < d; ++col) {
      bool null_here =
          null_rate > 0.0 && (static_cast<double>(rng() >> 11) * 0x1.0p-53) < null_rate;
      if (null_here) {
        row.values.push_back(Value::null());
      } else if (domains[col] == -1) {
        // quantized floats so equal values actually occur
        row.values.push_back(
            Value::floating(static_cast<double>(rng() % 20) / 20.0));
      } else if (domains[col] == 0) {
        row.values.push_back(Value::boolean(rng() % 2 == 0));
      } else {
        row.values.push_back(Value::integer(static_cast<int64_t>(rng() % domains[col])));
      }
    }
    row.values.push_back(Value::integer(static_cast<int64_t>(rng() % 1000000)));
    data.dataset.rows.push_back(std::move(row));
  }

  for (size_t i = 0; i < data.spec.dims.size(); ++i) {
    if (i > 0) {
      data.skyline_clause += ", ";
    }
    data.skyline_clause += columns[i].name;
    data.skyline_clause += " ";
    data.skyline_clause += dim_kind_name(data.spec.dims[i].kind);
  }
  return data;
}

}  // namespace skyline::oracle
