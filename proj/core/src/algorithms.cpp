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
#include "skyline/algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace skyline {

namespace {

using DominanceFn = DominanceOutcome (*)(const Row &, const Row &, const SkylineSpec &);

/// BNL candidate set: indices into the input span, in arrival order. The
/// window never contains a dominated row, and in distinct mode never two
/// equivalent rows.
class Window {
 public:
  explicit Window(std::span<const Row> rows) : rows_(rows) {}

  /// Runs one BNL step for rows_[candidate]. Returns with the window
  /// updated; the candidate is admitted unless some resident dominates it
  /// (or, under distinct, ties with it).
  void admit(size_t candidate, const SkylineSpec &spec, DominanceFn dominates,
             CheckCounter &counter) {
    const Row &t = rows_[candidate];
    size_t keep = 0;
    size_t i = 0;
    bool insert_t = true;
    bool stop = false;
    for (; i < members_.size() && !stop; ++i) {
      const Row &w = rows_[members_[i]];
      ++counter.dominance_tests;
      switch (dominates(w, t, spec)) {
        case DominanceOutcome::LeftDominates:
          // Dominated: by transitivity t cannot evict anything either, so
          // the rest of the window need not be scanned.
          insert_t = false;
          stop = true;
          members_[keep++] = members_[i];
          break;
        case DominanceOutcome::Equivalent:
          // Equal on all skyline dims: t relates to every other resident
          // exactly as w does, so no eviction can follow. The resident has
          // the lower ordinal and wins under distinct.
          if (spec.distinct) {
            insert_t = false;
          }
          stop = true;
          members_[keep++] = members_[i];
          break;
        case DominanceOutcome::RightDominates:
          break;  // t evicts w: simply do not keep w
        case DominanceOutcome::Incomparable:
          members_[keep++] = members_[i];
          break;
      }
    }
    for (; i < members_.size(); ++i) {
      members_[keep++] = members_[i];
    }
    members_.resize(keep);
    if (insert_t) {
      members_.push_back(candidate);
    }
  }

  const std::vector<size_t> &members() const { return members_; }

 private:
  std::span<const Row> rows_;
  std::vector<size_t> members_;
};

std::vector<Row> bnl(std::span<const Row> rows, const SkylineSpec &spec, DominanceFn dominates,
                     CheckCounter &counter) {
  Window window(rows);
  for (size_t i = 0; i < rows.size(); ++i) {
    counter.check_budget();
    window.admit(i, spec, dominates, counter);
  }
  std::vector<Row> out;
  out.reserve(window.members().size());
  for (size_t idx : window.members()) {
    out.push_back(rows[idx]);
  }
  return out;
}

/// Runs `task(i)` for every partition index on up to `workers` threads.
/// Each task owns its output slot and counter shard exclusively.
template <typename Task>
void run_partitioned(size_t partition_count, unsigned workers, Task &&task) {
  unsigned n_threads = static_cast<unsigned>(
      std::min<size_t>(std::max(1u, workers), std::max<size_t>(partition_count, 1)));
  if (n_threads <= 1 || partition_count <= 1) {
    for (size_t i = 0; i < partition_count; ++i) {
      task(i);
    }
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= partition_count) {
        return;
      }
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    threads.emplace_back(worker);
  }
  for (auto &t : threads) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

std::vector<std::vector<Row>> local_skylines(const std::vector<std::span<const Row>> &partitions,
                                             const SkylineSpec &spec, DominanceFn dominates,
                                             CheckCounter &counter, unsigned workers) {
  std::vector<std::vector<Row>> locals(partitions.size());
  std::vector<CheckCounter> shards(partitions.size());
  for (auto &shard : shards) {
    shard.deadline = counter.deadline;
  }
  run_partitioned(partitions.size(), workers, [&](size_t i) {
    locals[i] = bnl(partitions[i], spec, dominates, shards[i]);
  });
  for (const auto &shard : shards) {
    counter.merge(shard);
  }
  return locals;
}

bool any_null_in_skyline_dims(std::span<const Row> rows, const SkylineSpec &spec) {
  for (const Row &row : rows) {
    for (const auto &dim : spec.dims) {
      if (row.values[dim.column].is_null()) {
        return true;
      }
    }
  }
  return false;
}

/// Total order on values used only for grouping: null first, then by kind,
/// then by value. Not a dominance order.
int grouping_compare(const Value &a, const Value &b) {
  if (a.is_null() || b.is_null()) {
    return (a.is_null() ? 0 : 1) - (b.is_null() ? 0 : 1);
  }
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
    case ValueKind::Int:
      return a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
    case ValueKind::Float:
      return a.as_float() < b.as_float() ? -1 : (a.as_float() > b.as_float() ? 1 : 0);
    case ValueKind::Bool:
      return static_cast<int>(a.as_bool()) - static_cast<int>(b.as_bool());
    case ValueKind::Text:
      return a.as_text().compare(b.as_text()) < 0 ? -1 : (a.as_text() == b.as_text() ? 0 : 1);
  }
  return 0;
}

}  // namespace

NullSignature null_signature(const Row &row, const SkylineSpec &spec) {
  NullSignature sig;
  for (size_t i = 0; i < spec.dims.size(); ++i) {
    if (row.values[spec.dims[i].column].is_null()) {
      sig.bits |= uint64_t{1} << i;
    }
  }
  return sig;
}

std::vector<Row> bnl_skyline(std::span<const Row> rows, const SkylineSpec &spec,
                             CheckCounter &counter) {
  return bnl(rows, spec, &dominates_complete, counter);
}

std::vector<std::vector<Row>> local_skylines_complete(
    const std::vector<std::span<const Row>> &partitions, const SkylineSpec &spec,
    CheckCounter &counter, unsigned workers) {
  return local_skylines(partitions, spec, &dominates_complete, counter, workers);
}

std::vector<Row> global_skyline_complete(std::span<const Row> local_union,
                                         const SkylineSpec &spec, CheckCounter &counter) {
  return bnl(local_union, spec, &dominates_complete, counter);
}

std::map<NullSignature, std::vector<Row>> partition_by_null_signature(std::span<const Row> rows,
                                                                      const SkylineSpec &spec) {
  std::map<NullSignature, std::vector<Row>> partitions;
  for (const Row &row : rows) {
    partitions[null_signature(row, spec)].push_back(row);
  }
  return partitions;
}

std::vector<std::vector<Row>> local_skylines_incomplete(
    const std::map<NullSignature, std::vector<Row>> &partitions, const SkylineSpec &spec,
    CheckCounter &counter, unsigned workers) {
  std::vector<std::span<const Row>> views;
  views.reserve(partitions.size());
  for (const auto &[sig, rows] : partitions) {
    views.emplace_back(rows);
  }
  return local_skylines(views, spec, &dominates_incomplete, counter, workers);
}

std::vector<Row> global_skyline_incomplete(std::span<const Row> local_union,
                                           const SkylineSpec &spec, CheckCounter &counter) {
  size_t n = local_union.size();
  std::vector<char> dominated(n, 0);
  for (size_t i = 0; i < n; ++i) {
    counter.check_budget();
    for (size_t j = i + 1; j < n; ++j) {
      ++counter.dominance_tests;
      switch (dominates_incomplete(local_union[i], local_union[j], spec)) {
        case DominanceOutcome::LeftDominates:
          dominated[j] = 1;
          break;
        case DominanceOutcome::RightDominates:
          dominated[i] = 1;
          break;
        default:
          break;
      }
      // Deletion is deferred: even a dominated row keeps being compared, as
      // it may be the only row dominating some third one.
    }
  }
  std::vector<Row> out;
  for (size_t i = 0; i < n; ++i) {
    if (!dominated[i]) {
      out.push_back(local_union[i]);
    }
  }
  if (spec.distinct) {
    out = distinct_post_pass(std::move(out), spec);
  }
  return out;
}

std::vector<Row> flawed_global_incomplete(const std::vector<std::vector<Row>> &clusters,
                                          const SkylineSpec &spec) {
  // Local skyline per cluster first, as in the prior-art algorithm.
  CheckCounter scratch;
  std::vector<std::vector<Row>> survivors;
  survivors.reserve(clusters.size());
  for (const auto &cluster : clusters) {
    survivors.push_back(bnl(cluster, spec, &dominates_incomplete, scratch));
  }

  std::vector<std::vector<char>> deleted(survivors.size());
  for (size_t c = 0; c < survivors.size(); ++c) {
    deleted[c].assign(survivors[c].size(), 0);
  }

  // Sweep the clusters in their given order. Each point p is compared with
  // the still-live points of all *later* clusters; points p dominates are
  // eliminated immediately, and p itself is eliminated after its scan when
  // some later point dominated it. Immediate elimination is exactly the
  // flaw: under cyclic dominance it can erase the only witness against a
  // third tuple.
  for (size_t ci = 0; ci < survivors.size(); ++ci) {
    for (size_t pi = 0; pi < survivors[ci].size(); ++pi) {
      if (deleted[ci][pi]) {
        continue;
      }
      const Row &p = survivors[ci][pi];
      bool domination_flag = false;
      for (size_t cj = ci + 1; cj < survivors.size(); ++cj) {
        for (size_t qi = 0; qi < survivors[cj].size(); ++qi) {
          if (deleted[cj][qi]) {
            continue;
          }
          switch (dominates_incomplete(p, survivors[cj][qi], spec)) {
            case DominanceOutcome::LeftDominates:
              deleted[cj][qi] = 1;
              break;
            case DominanceOutcome::RightDominates:
              domination_flag = true;
              break;
            default:
              break;
          }
        }
      }
      if (domination_flag) {
        deleted[ci][pi] = 1;
      }
    }
  }

  std::vector<Row> out;
  for (size_t c = 0; c < survivors.size(); ++c) {
    for (size_t i = 0; i < survivors[c].size(); ++i) {
      if (!deleted[c][i]) {
        out.push_back(survivors[c][i]);
      }
    }
  }
  return out;
}

std::vector<Row> reference_skyline(std::span<const Row> rows, const SkylineSpec &spec,
                                   CheckCounter &counter) {
  DominanceFn dominates =
      any_null_in_skyline_dims(rows, spec) ? &dominates_incomplete : &dominates_complete;
  std::vector<Row> out;
  for (size_t r = 0; r < rows.size(); ++r) {
    counter.check_budget();
    bool is_dominated = false;
    for (size_t s = 0; s < rows.size(); ++s) {
      if (s == r) {
        continue;
      }
      ++counter.dominance_tests;
      if (dominates(rows[s], rows[r], spec) == DominanceOutcome::LeftDominates) {
        is_dominated = true;
        break;
      }
    }
    if (!is_dominated) {
      out.push_back(rows[r]);
    }
  }
  if (spec.distinct) {
    out = distinct_post_pass(std::move(out), spec);
  }
  return out;
}

std::vector<Row> distinct_post_pass(std::vector<Row> rows, const SkylineSpec &spec) {
  if (rows.size() <= 1) {
    return rows;
  }
  std::vector<size_t> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  auto key_less = [&](size_t a, size_t b) {
    for (const auto &dim : spec.dims) {
      int c = grouping_compare(rows[a].values[dim.column], rows[b].values[dim.column]);
      if (c != 0) {
        return c < 0;
      }
    }
    return rows[a].ordinal < rows[b].ordinal;
  };
  std::sort(order.begin(), order.end(), key_less);

  auto same_key = [&](size_t a, size_t b) {
    for (const auto &dim : spec.dims) {
      if (grouping_compare(rows[a].values[dim.column], rows[b].values[dim.column]) != 0) {
        return false;
      }
    }
    return true;
  };
  std::vector<char> keep(rows.size(), 0);
  size_t i = 0;
  while (i < order.size()) {
    size_t group_end = i + 1;
    size_t best = order[i];
    while (group_end < order.size() && same_key(order[i], order[group_end])) {
      if (rows[order[group_end]].ordinal < rows[best].ordinal) {
        best = order[group_end];
      }
      ++group_end;
    }
    keep[best] = 1;
    i = group_end;
  }

  std::vector<Row> out;
  out.reserve(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    if (keep[k]) {
      out.push_back(std::move(rows[k]));
    }
  }
  return out;
}

}  // namespace skyline
