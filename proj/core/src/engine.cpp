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
#include "skyline/engine.hpp"

#include "skyline/error.hpp"

namespace skyline {

PlannedQuery plan_query(std::string_view text, const Catalog &catalog,
                        const QueryOptions &options) {
  PlannedQuery planned;
  planned.ast = parse_query(text);

  const Dataset *table = catalog.find(planned.ast.from_table);
  if (!table) {
    throw AnalysisError("unknown table '" + planned.ast.from_table + "'");
  }
  planned.table_schema = table->schema;

  planned.logical = analyze(planned.ast, planned.table_schema);
  if (options.optimize && options.algorithm == AlgorithmChoice::Auto) {
    planned.logical = optimize(std::move(planned.logical), planned.table_schema);
  }
  planned.physical = select_algorithm(*planned.logical, planned.table_schema, options.algorithm);
  return planned;
}

ExecResult run_query(std::string_view text, const Catalog &catalog, const QueryOptions &options) {
  PlannedQuery planned = plan_query(text, catalog, options);
  return execute(*planned.physical, catalog, options.exec);
}

}  // namespace skyline
