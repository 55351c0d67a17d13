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
#include <doctest.h>

#include <sstream>

#include "skyline/bench.hpp"
#include "skyline/datagen.hpp"

using namespace skyline;

TEST_SUITE("cli-bench") {

TEST_CASE("generation is deterministic in the seed") {
  GenSpec spec;
  spec.n = 100;
  spec.d = 3;
  spec.seed = 7;
  Dataset a = generate_dataset(spec);
  Dataset b = generate_dataset(spec);
  REQUIRE(a.rows.size() == 100);
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].values == b.rows[i].values);
  }
  spec.seed = 8;
  Dataset c = generate_dataset(spec);
  bool any_difference = false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    any_difference = any_difference || !(a.rows[i].values == c.rows[i].values);
  }
  CHECK(any_difference);
}

TEST_CASE("zero null rate marks dimensions non-nullable") {
  GenSpec spec;
  spec.n = 10;
  spec.d = 2;
  Dataset data = generate_dataset(spec);
  REQUIRE(data.schema.arity() == 3);  // id + d1 + d2
  CHECK(data.schema.column(0).name == "id");
  for (size_t i = 0; i < data.schema.arity(); ++i) {
    CHECK_FALSE(data.schema.column(i).nullable);
  }
}

TEST_CASE("observed null fraction tracks the requested rate") {
  GenSpec spec;
  spec.n = 1000;
  spec.d = 3;
  spec.null_rate = 0.3;
  spec.seed = 99;
  Dataset data = generate_dataset(spec);
  for (unsigned dim = 1; dim <= spec.d; ++dim) {
    size_t nulls = 0;
    for (const Row &row : data.rows) {
      nulls += row.values[dim].is_null() ? 1 : 0;
    }
    double fraction = static_cast<double>(nulls) / static_cast<double>(spec.n);
    CHECK(fraction >= 0.2);  // binomial bound at n=1000
    CHECK(fraction <= 0.4);
    CHECK(data.schema.column(dim).nullable);
  }
}

TEST_CASE("single-row generation works") {
  GenSpec spec;
  spec.n = 1;
  spec.d = 1;
  Dataset data = generate_dataset(spec);
  REQUIRE(data.rows.size() == 1);
  CHECK(data.rows[0].values[0].as_int() == 0);
}

TEST_CASE("generation spec validation") {
  GenSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS(generate_dataset(bad), ExecError);
  bad.n = 1;
  bad.null_rate = 1.0;
  CHECK_THROWS_AS(generate_dataset(bad), ExecError);
}

TEST_CASE("bench queries alternate MIN and MAX") {
  CHECK(bench_query(1) == "SELECT * FROM bench SKYLINE OF d1 MIN");
  CHECK(bench_query(3) == "SELECT * FROM bench SKYLINE OF d1 MIN, d2 MAX, d3 MIN");
}

TEST_CASE("a bench matrix emits one record per cell with consistent sizes") {
  BenchMatrix matrix;
  matrix.n_list = {500};
  matrix.d_list = {1, 2, 3};
  matrix.workers_list = {2};
  matrix.algorithms = {AlgorithmChoice::DistributedComplete,
                       AlgorithmChoice::NondistributedComplete, AlgorithmChoice::Reference};
  matrix.repeats = 3;
  matrix.seed = 5;
  auto records = run_bench(matrix);
  REQUIRE(records.size() == 9);

  // determinism of results (not timings): within one (n, d) cell group the
  // skyline size is identical across algorithms
  for (unsigned d : matrix.d_list) {
    uint64_t size = 0;
    bool first = true;
    for (const auto &r : records) {
      if (r.d != d) {
        continue;
      }
      CHECK_FALSE(r.timed_out);
      CHECK(r.error.empty());
      if (first) {
        size = r.skyline_size;
        first = false;
      } else {
        CHECK(r.skyline_size == size);
      }
    }
  }
}

TEST_CASE("the four-algorithm matrix yields one record per cell") {
  BenchMatrix matrix;
  matrix.n_list = {500};
  matrix.d_list = {1, 2, 3, 4, 5, 6};
  matrix.workers_list = {4};
  matrix.algorithms = {AlgorithmChoice::DistributedComplete,
                       AlgorithmChoice::NondistributedComplete,
                       AlgorithmChoice::DistributedIncomplete, AlgorithmChoice::Reference};
  matrix.repeats = 1;
  matrix.seed = 9;
  auto records = run_bench(matrix);
  REQUIRE(records.size() == 24);  // 6 dims x 4 algorithms
  for (const auto &r : records) {
    CHECK(r.error.empty());  // incomplete algorithms are valid on complete data
    CHECK_FALSE(r.timed_out);
  }
}

TEST_CASE("timeouts are recorded, not fatal") {
  BenchMatrix matrix;
  matrix.n_list = {30000};
  matrix.d_list = {6};
  matrix.workers_list = {1};
  matrix.algorithms = {AlgorithmChoice::Reference};
  matrix.repeats = 3;
  matrix.timeout_seconds = 0.001;
  auto records = run_bench(matrix);
  REQUIRE(records.size() == 1);
  CHECK(records[0].timed_out);
  CHECK(records[0].wall_ms >= 1.0);  // at least the budget
}

TEST_CASE("forcing a complete algorithm onto incomplete data records an error cell") {
  BenchMatrix matrix;
  matrix.n_list = {100};
  matrix.d_list = {2};
  matrix.workers_list = {1};
  matrix.algorithms = {AlgorithmChoice::DistributedComplete, AlgorithmChoice::Reference};
  matrix.null_rate = 0.4;
  matrix.repeats = 2;
  auto records = run_bench(matrix);
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].error.empty());  // distributed-complete rejected by the planner
  CHECK(records[1].error.empty());        // reference handles nulls
  CHECK(records[1].skyline_size > 0);
}

TEST_CASE("bench CSV carries the full header") {
  std::vector<BenchRecord> records(1);
  records[0].algorithm = "reference";
  records[0].n = 10;
  records[0].d = 2;
  records[0].workers = 1;
  records[0].wall_ms = 1.5;
  records[0].skyline_size = 3;
  std::ostringstream out;
  write_bench_csv(records, out);
  std::string text = out.str();
  CHECK(text.find("algorithm,n,d,workers,wall_ms,dominance_tests,skyline_size,timed_out,error") ==
        0);
  CHECK(text.find("reference,10,2,1,1.5,0,3,false,") != std::string::npos);
}

}  // TEST_SUITE
