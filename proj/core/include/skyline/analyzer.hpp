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

#include "skyline/plan.hpp"

namespace skyline {

/// Resolves the AST against the schema of the FROM table and builds the
/// logical plan Scan -> Filter? -> Skyline? -> Project -> Sort?. A skyline
/// dimension absent from the select list is legal: the skyline runs over
/// the full rows and the projection drops the extra column afterwards.
/// Throws AnalysisError on unknown columns, MIN/MAX over text, duplicate
/// skyline columns, all-DIFF specs, or type-incompatible comparisons.
std::unique_ptr<LogicalNode> analyze(const QueryAst &ast, const Schema &schema);

}  // namespace skyline
