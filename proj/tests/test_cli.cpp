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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef SKYLINE_CLI_PATH
#error "SKYLINE_CLI_PATH must point at the skyline binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string &args) {
  static int counter = 0;
  fs::path err_path = fs::temp_directory_path() / ("skyline_cli_err_" + std::to_string(counter++));
  std::string command =
      std::string(SKYLINE_CLI_PATH) + " " + args + " 2>" + err_path.string();
  RunResult result;
  FILE *pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream err_text;
  err_text << err.rdbuf();
  result.err = err_text.str();
  fs::remove(err_path);
  return result;
}

fs::path write_temp(const std::string &name, const std::string &content) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

const char *kHotelsCsv = "price,user_rating\n50,7\n80,9\n60,9\n90,6\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("--version and --help work") {
  RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("skyline") != std::string::npos);

  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("query") != std::string::npos);
  CHECK(help.out.find("generate") != std::string::npos);
  CHECK(help.out.find("bench") != std::string::npos);
}

TEST_CASE("query returns the skyline rows as CSV") {
  fs::path csv = write_temp("skyline_cli_hotels.csv", kHotelsCsv);
  RunResult result = run_cli(
      "query --input " + csv.string() +
      " --query \"SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating "
      "MAX\" --workers 2");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "price,user_rating\n50,7\n60,9\n");
  CHECK(result.err.find("algorithm=distributed-complete") != std::string::npos);
  CHECK(result.err.find("dominance_tests=") != std::string::npos);
  fs::remove(csv);
}

TEST_CASE("--explain prints the two-node skyline lowering") {
  fs::path csv = write_temp("skyline_cli_hotels2.csv", kHotelsCsv);
  RunResult result = run_cli(
      "query --explain --input " + csv.string() +
      " --query \"SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating "
      "MAX\"");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("LocalSkylineExec") != std::string::npos);
  CHECK(result.out.find("GlobalSkylineExec(Complete") != std::string::npos);
  fs::remove(csv);
}

TEST_CASE("error classes map to distinct exit codes") {
  fs::path csv = write_temp("skyline_cli_hotels3.csv", kHotelsCsv);

  RunResult parse_error =
      run_cli("query --input " + csv.string() + " --query \"SELECT * FROM t SKYLINE OF x\"");
  CHECK(parse_error.exit_code == 2);
  CHECK(parse_error.err.find("offset") != std::string::npos);

  RunResult analysis_error =
      run_cli("query --input " + csv.string() +
              " --query \"SELECT nope FROM hotels SKYLINE OF price MIN\"");
  CHECK(analysis_error.exit_code == 3);

  RunResult plan_error =
      run_cli("query --algorithm distributed-complete --input " + csv.string() +
              " --query \"SELECT price FROM hotels\"");
  CHECK(plan_error.exit_code == 3);

  RunResult ingest_error =
      run_cli("query --input /nonexistent.csv --query \"SELECT * FROM t\"");
  CHECK(ingest_error.exit_code == 4);

  fs::remove(csv);
}

TEST_CASE("generate is reproducible and feeds back into query") {
  fs::path out1 = fs::temp_directory_path() / "skyline_gen_1.csv";
  fs::path out2 = fs::temp_directory_path() / "skyline_gen_2.csv";
  RunResult g1 = run_cli("generate --n 100 --d 3 --null-rate 0 --seed 7 --out " + out1.string());
  RunResult g2 = run_cli("generate --n 100 --d 3 --null-rate 0 --seed 7 --out " + out2.string());
  CHECK(g1.exit_code == 0);
  CHECK(g2.exit_code == 0);

  std::ifstream f1(out1), f2(out2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK_FALSE(s1.str().empty());

  RunResult q = run_cli("query --input " + out1.string() +
                        " --query \"SELECT * FROM data SKYLINE OF d1 MIN, d2 MAX\"");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("id,d1,d2,d3") == 0);

  fs::remove(out1);
  fs::remove(out2);
}

TEST_CASE("generate can emit a nullable-declared schema file") {
  fs::path csv = fs::temp_directory_path() / "skyline_gen_s.csv";
  fs::path schema = fs::temp_directory_path() / "skyline_gen_s.schema";
  RunResult g = run_cli("generate --n 50 --d 2 --seed 3 --out " + csv.string() +
                        " --schema-out " + schema.string() + " --declare-nullable");
  CHECK(g.exit_code == 0);

  std::ifstream f(schema);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str().find("id:int:false") != std::string::npos);
  CHECK(text.str().find("d1:int:true") != std::string::npos);

  // declared-nullable data routes to the incomplete pipeline: one partition
  RunResult q = run_cli("query --input " + csv.string() + " --schema " + schema.string() +
                        " --query \"SELECT * FROM data SKYLINE OF d1 MIN, d2 MAX\"");
  CHECK(q.exit_code == 0);
  CHECK(q.err.find("algorithm=distributed-incomplete") != std::string::npos);
  CHECK(q.err.find("local_partitions=1") != std::string::npos);

  fs::remove(csv);
  fs::remove(schema);
}

TEST_CASE("bench writes the record CSV") {
  fs::path out = fs::temp_directory_path() / "skyline_bench.csv";
  RunResult b = run_cli(
      "bench --n 300 --d 2 --workers 1,2 --algorithms distributed-complete,reference "
      "--repeats 1 --seed 2 --out " +
      out.string());
  CHECK(b.exit_code == 0);

  std::ifstream f(out);
  std::string header;
  std::getline(f, header);
  CHECK(header == "algorithm,n,d,workers,wall_ms,dominance_tests,skyline_size,timed_out,error");
  size_t lines = 0;
  std::string line;
  while (std::getline(f, line)) {
    lines += line.empty() ? 0 : 1;
  }
  CHECK(lines == 4);  // 2 worker counts x 2 algorithms
  fs::remove(out);
}

}  // TEST_SUITE
