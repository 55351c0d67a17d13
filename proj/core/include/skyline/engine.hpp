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

#include <string_view>

#include "skyline/analyzer.hpp"
#include "skyline/executor.hpp"
#include "skyline/optimizer.hpp"
#include "skyline/parser.hpp"
#include "skyline/physical_planner.hpp"

namespace skyline {

struct QueryOptions {
  AlgorithmChoice algorithm = AlgorithmChoice::Auto;
  bool optimize = true;  // forced algorithms bypass the logical rewrites
  ExecConfig exec;
};

struct PlannedQuery {
  QueryAst ast;
  Schema table_schema;
  std::unique_ptr<LogicalNode> logical;
  std::unique_ptr<PhysicalNode> physical;
};

/// parse -> analyze -> optimize -> lower. When an algorithm is forced, the
/// logical rewrites are skipped so the forced strategy actually runs.
PlannedQuery plan_query(std::string_view text, const Catalog &catalog,
                        const QueryOptions &options = {});

/// Full pipeline: plan_query + execute.
ExecResult run_query(std::string_view text, const Catalog &catalog,
                     const QueryOptions &options = {});

}  // namespace skyline
