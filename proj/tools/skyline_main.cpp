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
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "skyline/bench.hpp"
#include "skyline/csv.hpp"
#include "skyline/engine.hpp"

namespace {

constexpr const char *kVersion = "0.1.0";

struct QueryArgs {
  std::string input;
  std::string schema;
  std::string query;
  std::string algorithm = "auto";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::optional<unsigned> partitions;
  bool explain = false;
  std::string output;
};

int run_query_command(const QueryArgs &args) {
  auto algorithm = skyline::algorithm_choice_from_name(args.algorithm);
  if (!algorithm) {
    std::cerr << "error: unknown algorithm '" << args.algorithm << "'" << std::endl;
    return 1;
  }

  std::optional<skyline::Schema> declared;
  if (!args.schema.empty()) {
    declared = skyline::read_schema_file(args.schema);
  }

  // The single-table dialect binds --input to whatever table FROM names.
  skyline::QueryAst ast = skyline::parse_query(args.query);
  skyline::Catalog catalog;
  catalog.register_table(ast.from_table, skyline::ingest_csv(args.input, declared));

  skyline::QueryOptions options;
  options.algorithm = *algorithm;
  options.exec.workers = args.workers;
  options.exec.partitions = args.partitions;

  if (args.explain) {
    skyline::PlannedQuery planned = skyline::plan_query(args.query, catalog, options);
    std::cout << skyline::physical_plan_to_string(*planned.physical, planned.table_schema);
    return 0;
  }

  skyline::ExecResult result = skyline::run_query(args.query, catalog, options);
  if (args.output.empty()) {
    skyline::write_csv(result.data, std::cout);
  } else {
    skyline::write_csv_file(result.data, args.output);
  }
  std::cerr << result.stats.to_string();
  return 0;
}

struct GenerateArgs {
  skyline::GenSpec spec;
  std::string value_kind = "int";
  std::string out;
  std::string schema_out;
  bool declare_nullable = false;
};

int run_generate_command(GenerateArgs &args) {
  if (args.value_kind == "int") {
    args.spec.value_kind = skyline::GenValueKind::Int;
  } else if (args.value_kind == "float") {
    args.spec.value_kind = skyline::GenValueKind::Float;
  } else {
    std::cerr << "error: --value-kind must be int or float" << std::endl;
    return 1;
  }

  skyline::Dataset dataset = skyline::generate_dataset(args.spec);
  skyline::write_csv_file(dataset, args.out);

  if (!args.schema_out.empty()) {
    skyline::Schema schema = dataset.schema;
    if (args.declare_nullable) {
      std::vector<skyline::ColumnType> columns = schema.columns();
      for (size_t i = 1; i < columns.size(); ++i) {  // keep the key column strict
        columns[i].nullable = true;
      }
      schema = skyline::Schema(std::move(columns));
    }
    skyline::write_schema_file(schema, args.schema_out);
  }
  std::cerr << "generated " << args.spec.n << " rows x " << args.spec.d << " dims into "
            << args.out << std::endl;
  return 0;
}

struct BenchArgs {
  skyline::BenchMatrix matrix;
  std::vector<std::string> algorithms;
  std::string value_kind = "int";
  std::string out;
};

int run_bench_command(BenchArgs &args) {
  if (args.value_kind == "int") {
    args.matrix.value_kind = skyline::GenValueKind::Int;
  } else if (args.value_kind == "float") {
    args.matrix.value_kind = skyline::GenValueKind::Float;
  } else {
    std::cerr << "error: --value-kind must be int or float" << std::endl;
    return 1;
  }
  for (const auto &name : args.algorithms) {
    auto choice = skyline::algorithm_choice_from_name(name);
    if (!choice || *choice == skyline::AlgorithmChoice::Auto) {
      std::cerr << "error: --algorithms entries must name a concrete algorithm, got '" << name
                << "'" << std::endl;
      return 1;
    }
    args.matrix.algorithms.push_back(*choice);
  }

  std::vector<skyline::BenchRecord> records = skyline::run_bench(args.matrix, &std::cerr);
  if (args.out.empty()) {
    skyline::write_bench_csv(records, std::cout);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) {
      throw skyline::ExecError("cannot write benchmark CSV '" + args.out + "'");
    }
    skyline::write_bench_csv(records, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"skyline: a query engine with native skyline (Pareto-front) support"};
  app.set_version_flag("--version", std::string("skyline ") + kVersion);
  app.require_subcommand(1);

  QueryArgs query_args;
  CLI::App *query = app.add_subcommand("query", "Run a query over a CSV file");
  query->add_option("--input", query_args.input, "input CSV file (bound to the FROM table)")
      ->required();
  query->add_option("--schema", query_args.schema,
                    "schema file (name:type:nullable per line); inferred from the data if absent");
  query->add_option("--query", query_args.query, "query text")->required();
  query->add_option("--algorithm", query_args.algorithm,
                    "auto|distributed-complete|nondistributed-complete|distributed-incomplete|"
                    "reference");
  query->add_option("--workers", query_args.workers, "worker threads for the local phase");
  query->add_option("--partitions", query_args.partitions,
                    "partition count for the local phase (default: workers)");
  query->add_flag("--explain", query_args.explain, "print the physical plan instead of executing");
  query->add_option("--output", query_args.output, "write the result CSV here instead of stdout");

  GenerateArgs gen_args;
  CLI::App *generate = app.add_subcommand("generate", "Generate a synthetic CSV dataset");
  generate->add_option("--n", gen_args.spec.n, "row count")->required();
  generate->add_option("--d", gen_args.spec.d, "skyline-value dimension count")->required();
  generate->add_option("--value-kind", gen_args.value_kind, "int|float");
  generate->add_option("--null-rate", gen_args.spec.null_rate, "per-dimension null rate in [0,1)");
  generate->add_option("--seed", gen_args.spec.seed, "RNG seed");
  generate->add_option("--out", gen_args.out, "output CSV path")->required();
  generate->add_option("--schema-out", gen_args.schema_out, "also write a schema file");
  generate->add_flag("--declare-nullable", gen_args.declare_nullable,
                     "mark dimension columns nullable in the schema file regardless of null rate");

  BenchArgs bench_args;
  CLI::App *bench = app.add_subcommand("bench", "Run the benchmark matrix over generated data");
  bench->add_option("--n", bench_args.matrix.n_list, "tuple counts")->required()->delimiter(',');
  bench->add_option("--d", bench_args.matrix.d_list, "dimension counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--workers", bench_args.matrix.workers_list, "worker counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--algorithms", bench_args.algorithms, "algorithms to compare")
      ->required()
      ->delimiter(',');
  bench->add_option("--timeout", bench_args.matrix.timeout_seconds, "per-run timeout in seconds");
  bench->add_option("--repeats", bench_args.matrix.repeats, "runs per cell (median reported)");
  bench->add_option("--null-rate", bench_args.matrix.null_rate,
                    "per-dimension null rate of the generated data");
  bench->add_option("--value-kind", bench_args.value_kind, "int|float");
  bench->add_option("--seed", bench_args.matrix.seed, "RNG seed for data generation");
  bench->add_option("--out", bench_args.out, "benchmark CSV path (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (query->parsed()) {
      return run_query_command(query_args);
    }
    if (generate->parsed()) {
      return run_generate_command(gen_args);
    }
    if (bench->parsed()) {
      return run_bench_command(bench_args);
    }
  } catch (const skyline::EngineError &e) {
    std::cerr << "error: " << e.what() << std::endl;
    return e.exit_code();
  } catch (const skyline::EngineDefect &e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 5;
  }
  return 0;
}
