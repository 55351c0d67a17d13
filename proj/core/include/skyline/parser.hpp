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

#include "skyline/ast.hpp"
#include "skyline/lexer.hpp"

namespace skyline {

/// Recursive-descent parser for the SELECT-FROM-WHERE dialect with the
/// skyline clause. Rejects trailing input; every error names the offending
/// token and its byte offset.
QueryAst parse(const std::vector<Token> &tokens);

/// tokenize + parse in one step.
QueryAst parse_query(std::string_view text);

}  // namespace skyline
