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
#include "skyline/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "skyline/engine.hpp"
#include "skyline/error.hpp"

namespace skyline {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

}  // namespace

std::string bench_query(unsigned d) {
  std::string query = "SELECT * FROM bench SKYLINE OF ";
  for (unsigned i = 1; i <= d; ++i) {
    if (i > 1) {
      query += ", ";
    }
    query += "d" + std::to_string(i) + (i % 2 == 1 ? " MIN" : " MAX");
  }
  return query;
}

std::vector<BenchRecord> run_bench(const BenchMatrix &matrix, std::ostream *progress) {
  if (matrix.repeats < 1) {
    throw ExecError("bench requires at least one repeat per cell");
  }
  std::vector<BenchRecord> records;

  for (uint64_t n : matrix.n_list) {
    for (unsigned d : matrix.d_list) {
      GenSpec gen;
      gen.n = n;
      gen.d = d;
      gen.value_kind = matrix.value_kind;
      gen.null_rate = matrix.null_rate;
      gen.seed = matrix.seed;
      Catalog catalog;
      catalog.register_table("bench", generate_dataset(gen));
      std::string query = bench_query(d);

      for (unsigned workers : matrix.workers_list) {
        for (AlgorithmChoice algorithm : matrix.algorithms) {
          BenchRecord record;
          record.algorithm = algorithm_choice_name(algorithm);
          record.n = n;
          record.d = d;
          record.workers = workers;

          std::vector<double> times;
          for (unsigned rep = 0; rep < matrix.repeats; ++rep) {
            QueryOptions options;
            options.algorithm = algorithm;
            options.exec.workers = workers;
            options.exec.deadline =
                Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(matrix.timeout_seconds));
            Clock::time_point start = Clock::now();
            try {
              ExecResult result = run_query(query, catalog, options);
              double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
              times.push_back(ms);
              record.dominance_tests = result.stats.dominance_tests;
              record.skyline_size = result.stats.rows_out;
            } catch (const TimeoutError &) {
              record.timed_out = true;
              record.wall_ms =
                  std::chrono::duration<double, std::milli>(Clock::now() - start).count();
              break;
            } catch (const PlanError &e) {
              record.error = e.what();
              break;
            }
          }
          if (!times.empty()) {
            record.wall_ms = median(times);
          }
          if (progress) {
            *progress << "bench " << record.algorithm << " n=" << n << " d=" << d
                      << " workers=" << workers;
            if (record.timed_out) {
              *progress << " TIMEOUT after " << record.wall_ms << " ms";
            } else if (!record.error.empty()) {
              *progress << " ERROR: " << record.error;
            } else {
              *progress << " median=" << record.wall_ms << " ms skyline=" << record.skyline_size;
            }
            *progress << std::endl;
          }
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

void write_bench_csv(const std::vector<BenchRecord> &records, std::ostream &out) {
  out << "algorithm,n,d,workers,wall_ms,dominance_tests,skyline_size,timed_out,error\n";
  for (const auto &r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.d << ',' << r.workers << ',' << r.wall_ms << ','
        << r.dominance_tests << ',' << r.skyline_size << ',' << (r.timed_out ? "true" : "false")
        << ',' << csv_escape(r.error) << '\n';
  }
}

}  // namespace skyline
