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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skyline/skyline_spec.hpp"
#include "skyline/value.hpp"

namespace skyline {

enum class CmpOp : uint8_t { Eq, NotEq, Lt, LtEq, Gt, GtEq };

const char *cmp_op_symbol(CmpOp op);

/// Unresolved boolean predicate: comparisons of a column against a literal,
/// combined with AND / OR / NOT.
struct PredicateAst {
  enum class Kind : uint8_t { Comparison, And, Or, Not };

  Kind kind = Kind::Comparison;
  std::string column;  // Comparison only
  CmpOp op = CmpOp::Eq;
  Value literal;
  std::unique_ptr<PredicateAst> left;   // And/Or: lhs; Not: operand
  std::unique_ptr<PredicateAst> right;  // And/Or: rhs

  bool equals(const PredicateAst &other) const;
  std::string to_sql() const;
};

struct SkylineClauseAst {
  bool distinct = false;
  bool complete = false;
  std::vector<std::pair<std::string, DimKind>> items;  // (column name, kind), length >= 1

  bool operator==(const SkylineClauseAst &) const = default;
};

struct OrderByAst {
  std::string column;
  bool ascending = true;

  bool operator==(const OrderByAst &) const = default;
};

struct QueryAst {
  bool select_all = false;                // SELECT *
  std::vector<std::string> select_list;   // empty iff select_all
  std::string from_table;
  std::unique_ptr<PredicateAst> where;    // optional
  std::optional<SkylineClauseAst> skyline;
  std::optional<OrderByAst> order_by;

  bool equals(const QueryAst &other) const;

  /// Canonical text form; parsing it yields an equal AST.
  std::string to_sql() const;
};

}  // namespace skyline
