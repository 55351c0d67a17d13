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
#include "skyline/executor.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "skyline/algorithms.hpp"
#include "skyline/error.hpp"

namespace skyline {

unsigned ExecConfig::effective_workers() const {
  unsigned w = std::max(1u, workers);
  if (const char *env = std::getenv("SKYLINE_THREADS")) {
    unsigned cap = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), cap);
    if (ec == std::errc{} && ptr == env + std::string_view(env).size() && cap >= 1) {
      w = std::min(w, cap);
    }
  }
  return w;
}

std::string ExecStats::to_string() const {
  std::ostringstream out;
  out << "algorithm=" << (algorithm.empty() ? "none" : algorithm) << "\n";
  out << "rows_in=" << rows_in << "\n";
  out << "rows_out=" << rows_out << "\n";
  out << "dominance_tests=" << dominance_tests << "\n";
  out << "local_partitions=" << local_partitions << "\n";
  out << "local_output_rows=" << local_output_rows << "\n";
  out << "workers=" << workers << "\n";
  out << "skyline_local_ms=" << skyline_local_ms << "\n";
  out << "skyline_global_ms=" << skyline_global_ms << "\n";
  for (const auto &stage : stages) {
    out << "stage_ms[" << stage.name << "]=" << stage.millis << "\n";
  }
  out << "total_ms=" << total_ms << "\n";
  return out.str();
}

std::vector<std::span<const Row>> split_unspecified(std::span<const Row> rows, size_t k) {
  if (k < 1) {
    throw EngineDefect("split_unspecified requires k >= 1");
  }
  std::vector<std::span<const Row>> chunks;
  chunks.reserve(k);
  size_t base = rows.size() / k;
  size_t remainder = rows.size() % k;
  size_t offset = 0;
  for (size_t i = 0; i < k; ++i) {
    size_t size = base + (i < remainder ? 1 : 0);
    chunks.push_back(rows.subspan(offset, size));
    offset += size;
  }
  return chunks;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Data flowing between stages: either a view into the catalog table or an
/// owned row vector produced by an earlier stage.
struct StageData {
  std::vector<Row> owned;
  std::span<const Row> view;
  Schema schema;

  void own(std::vector<Row> rows) {
    owned = std::move(rows);
    view = owned;
  }
};

class PlanExecutor {
 public:
  PlanExecutor(const Catalog &catalog, const ExecConfig &config, ExecStats &stats)
      : catalog_(catalog), config_(config), stats_(stats) {}

  StageData run(const PhysicalNode &node) {
    StageData input;
    if (node.child) {
      input = run(*node.child);
    }
    check_deadline();
    Clock::time_point start = Clock::now();
    StageData output = eval(node, std::move(input));
    stats_.stages.push_back({stage_name(node), elapsed_ms(start)});
    return output;
  }

 private:
  static std::string stage_name(const PhysicalNode &node) {
    switch (node.kind) {
      case PhysicalNode::Kind::ScanExec: return "scan";
      case PhysicalNode::Kind::FilterExec: return "filter";
      case PhysicalNode::Kind::ProjectExec: return "project";
      case PhysicalNode::Kind::LocalSkylineExec: return "skyline-local";
      case PhysicalNode::Kind::GlobalSkylineExec: return "skyline-global";
      case PhysicalNode::Kind::SingleDimScanExec: return "skyline-single-dim";
      case PhysicalNode::Kind::ReferenceSkylineExec: return "skyline-reference";
      case PhysicalNode::Kind::SortExec: return "sort";
    }
    return "?";
  }

  void check_deadline() const {
    if (config_.deadline != Clock::time_point::max() && Clock::now() > config_.deadline) {
      throw TimeoutError("execution exceeded its time budget");
    }
  }

  CheckCounter make_counter() const {
    CheckCounter counter;
    counter.deadline = config_.deadline;
    return counter;
  }

  StageData eval(const PhysicalNode &node, StageData input) {
    switch (node.kind) {
      case PhysicalNode::Kind::ScanExec: return eval_scan(node);
      case PhysicalNode::Kind::FilterExec: return eval_filter(node, std::move(input));
      case PhysicalNode::Kind::ProjectExec: return eval_project(node, std::move(input));
      case PhysicalNode::Kind::LocalSkylineExec: return eval_local(node, std::move(input));
      case PhysicalNode::Kind::GlobalSkylineExec: return eval_global(node, std::move(input));
      case PhysicalNode::Kind::SingleDimScanExec: return eval_single_dim(node, std::move(input));
      case PhysicalNode::Kind::ReferenceSkylineExec: return eval_reference(node, std::move(input));
      case PhysicalNode::Kind::SortExec: return eval_sort(node, std::move(input));
    }
    throw EngineDefect("unreachable physical node kind");
  }

  StageData eval_scan(const PhysicalNode &node) {
    const Dataset *table = catalog_.find(node.table);
    if (!table) {
      throw ExecError("table '" + node.table + "' is not registered");
    }
    StageData data;
    data.view = table->rows;
    data.schema = table->schema;
    return data;
  }

  StageData eval_filter(const PhysicalNode &node, StageData input) {
    std::vector<Row> passed;
    for (const Row &row : input.view) {
      auto verdict = node.predicate->evaluate(row);
      if (verdict.has_value() && *verdict) {
        passed.push_back(row);
      }
    }
    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(passed));
    return data;
  }

  StageData eval_project(const PhysicalNode &node, StageData input) {
    std::vector<ColumnType> columns;
    columns.reserve(node.columns.size());
    for (size_t idx : node.columns) {
      columns.push_back(input.schema.column(idx));
    }
    Schema projected(std::move(columns));

    bool identity = node.columns.size() == input.schema.arity();
    if (identity) {
      for (size_t i = 0; i < node.columns.size(); ++i) {
        if (node.columns[i] != i) {
          identity = false;
          break;
        }
      }
    }

    StageData data;
    data.schema = std::move(projected);
    if (identity) {
      data.owned = std::move(input.owned);
      data.view = input.view;
      return data;
    }
    std::vector<Row> rows;
    rows.reserve(input.view.size());
    for (const Row &row : input.view) {
      Row out;
      out.ordinal = row.ordinal;
      out.values.reserve(node.columns.size());
      for (size_t idx : node.columns) {
        out.values.push_back(row.values[idx]);
      }
      rows.push_back(std::move(out));
    }
    data.own(std::move(rows));
    return data;
  }

  StageData eval_local(const PhysicalNode &node, StageData input) {
    stats_.rows_in = input.view.size();
    stats_.workers = config_.effective_workers();
    CheckCounter counter = make_counter();
    Clock::time_point start = Clock::now();

    std::vector<std::vector<Row>> locals;
    if (node.distribution == Distribution::Unspecified) {
      auto chunks = split_unspecified(input.view, config_.effective_partitions());
      stats_.local_partitions = chunks.size();
      locals = local_skylines_complete(chunks, node.spec, counter, stats_.workers);
    } else {
      auto partitions = partition_by_null_signature(input.view, node.spec);
      stats_.local_partitions = partitions.size();
      locals = local_skylines_incomplete(partitions, node.spec, counter, stats_.workers);
    }

    // Concatenate in partition order; within a chunk ordinals are ascending,
    // so DISTINCT tie-breaking stays deterministic under any worker count.
    std::vector<Row> local_union;
    for (auto &local : locals) {
      for (auto &row : local) {
        local_union.push_back(std::move(row));
      }
    }
    stats_.local_output_rows = local_union.size();
    stats_.skyline_local_ms = elapsed_ms(start);
    stats_.dominance_tests += counter.dominance_tests;

    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(local_union));
    return data;
  }

  StageData eval_global(const PhysicalNode &node, StageData input) {
    bool has_local_child = node.child && node.child->kind == PhysicalNode::Kind::LocalSkylineExec;
    if (!has_local_child) {
      stats_.rows_in = input.view.size();
      stats_.workers = config_.effective_workers();
    }
    CheckCounter counter = make_counter();
    Clock::time_point start = Clock::now();

    std::vector<Row> result;
    if (node.variant == GlobalVariant::Complete) {
      stats_.algorithm = has_local_child ? "distributed-complete" : "nondistributed-complete";
      result = global_skyline_complete(input.view, node.spec, counter);
    } else {
      stats_.algorithm = has_local_child ? "distributed-incomplete" : "incomplete-global-only";
      result = global_skyline_incomplete(input.view, node.spec, counter);
      // The signature partitions interleave ordinals; restore input order.
      std::sort(result.begin(), result.end(),
                [](const Row &a, const Row &b) { return a.ordinal < b.ordinal; });
    }
    stats_.skyline_global_ms = elapsed_ms(start);
    stats_.dominance_tests += counter.dominance_tests;

    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(result));
    return data;
  }

  StageData eval_single_dim(const PhysicalNode &node, StageData input) {
    stats_.rows_in = input.view.size();
    stats_.workers = config_.effective_workers();
    stats_.algorithm = "single-dim-scan";
    Clock::time_point start = Clock::now();

    // Pass 1: find the extreme value.
    const Value *extreme = nullptr;
    for (const Row &row : input.view) {
      const Value &v = row.values[node.single_column];
      if (v.is_null()) {
        throw EngineDefect(
            "null value in a skyline dimension reached the single-dimension scan; "
            "either the planner failed to select the incomplete algorithm or the query "
            "asserted COMPLETE on data that contains nulls");
      }
      if (extreme == nullptr) {
        extreme = &v;
        continue;
      }
      ValueOrder order = compare_values(v, *extreme, node.single_kind);
      if (order == ValueOrder::Better) {
        extreme = &v;
      }
    }

    // Pass 2: keep the rows matching it (just the first under DISTINCT).
    std::vector<Row> result;
    if (extreme != nullptr) {
      for (const Row &row : input.view) {
        if (row.values[node.single_column] == *extreme) {
          result.push_back(row);
          if (node.single_distinct) {
            break;
          }
        }
      }
    }
    stats_.skyline_global_ms = elapsed_ms(start);

    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(result));
    return data;
  }

  StageData eval_reference(const PhysicalNode &node, StageData input) {
    stats_.rows_in = input.view.size();
    stats_.workers = config_.effective_workers();
    stats_.algorithm = "reference";
    CheckCounter counter = make_counter();
    Clock::time_point start = Clock::now();
    std::vector<Row> result = reference_skyline(input.view, node.spec, counter);
    stats_.skyline_global_ms = elapsed_ms(start);
    stats_.dominance_tests += counter.dominance_tests;

    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(result));
    return data;
  }

  StageData eval_sort(const PhysicalNode &node, StageData input) {
    std::vector<Row> rows(input.view.begin(), input.view.end());
    size_t col = node.sort_column;
    bool asc = node.sort_ascending;
    // Nulls sort last ascending, first descending. Stable sort keeps the
    // deterministic upstream order for ties.
    std::stable_sort(rows.begin(), rows.end(), [&](const Row &a, const Row &b) {
      const Value &va = a.values[col];
      const Value &vb = b.values[col];
      if (va.is_null() || vb.is_null()) {
        if (va.is_null() == vb.is_null()) {
          return false;
        }
        return asc ? vb.is_null() : va.is_null();
      }
      int cmp = 0;
      switch (va.kind()) {
        case ValueKind::Int:
          cmp = va.as_int() < vb.as_int() ? -1 : (va.as_int() > vb.as_int() ? 1 : 0);
          break;
        case ValueKind::Float:
          cmp = va.as_float() < vb.as_float() ? -1 : (va.as_float() > vb.as_float() ? 1 : 0);
          break;
        case ValueKind::Bool:
          cmp = static_cast<int>(va.as_bool()) - static_cast<int>(vb.as_bool());
          break;
        case ValueKind::Text: {
          int c = va.as_text().compare(vb.as_text());
          cmp = c < 0 ? -1 : (c > 0 ? 1 : 0);
          break;
        }
      }
      return asc ? cmp < 0 : cmp > 0;
    });

    StageData data;
    data.schema = std::move(input.schema);
    data.own(std::move(rows));
    return data;
  }

  const Catalog &catalog_;
  const ExecConfig &config_;
  ExecStats &stats_;
};

}  // namespace

ExecResult execute(const PhysicalNode &plan, const Catalog &catalog, const ExecConfig &config) {
  ExecResult result;
  Clock::time_point start = Clock::now();
  PlanExecutor executor(catalog, config, result.stats);
  StageData data = executor.run(plan);
  result.data.schema = std::move(data.schema);
  if (!data.owned.empty() || data.view.empty()) {
    result.data.rows = std::move(data.owned);
  } else {
    result.data.rows.assign(data.view.begin(), data.view.end());
  }
  result.stats.rows_out = result.data.rows.size();
  result.stats.total_ms = elapsed_ms(start);
  return result;
}

}  // namespace skyline
