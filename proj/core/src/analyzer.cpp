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
#include "skyline/analyzer.hpp"

#include "skyline/error.hpp"

namespace skyline {

namespace {

size_t resolve_column(const Schema &schema, const std::string &name, const char *context) {
  auto idx = schema.find_column(name);
  if (!idx) {
    throw AnalysisError("unknown column '" + name + "' in " + context);
  }
  return *idx;
}

/// Coerces the comparison literal to the column's type where lossless
/// (integer literal against a float column); rejects other mismatches.
Value coerce_literal(const Value &literal, const ColumnType &column) {
  if (literal.is_null()) {
    throw EngineDefect("null literal in predicate");
  }
  if (literal.kind() == column.kind) {
    return literal;
  }
  if (column.kind == ValueKind::Float && literal.kind() == ValueKind::Int) {
    return Value::floating(static_cast<double>(literal.as_int()));
  }
  throw AnalysisError("cannot compare column '" + column.name + "' of type " +
                      value_kind_name(column.kind) + " with a " +
                      value_kind_name(literal.kind()) + " literal");
}

std::unique_ptr<Predicate> resolve_predicate(const PredicateAst &ast, const Schema &schema) {
  auto node = std::make_unique<Predicate>();
  switch (ast.kind) {
    case PredicateAst::Kind::Comparison: {
      node->kind = Predicate::Kind::Comparison;
      node->column = resolve_column(schema, ast.column, "WHERE clause");
      const ColumnType &col = schema.column(node->column);
      node->column_name = col.name;
      node->op = ast.op;
      node->literal = coerce_literal(ast.literal, col);
      break;
    }
    case PredicateAst::Kind::Not:
      node->kind = Predicate::Kind::Not;
      node->left = resolve_predicate(*ast.left, schema);
      break;
    case PredicateAst::Kind::And:
    case PredicateAst::Kind::Or:
      node->kind = ast.kind == PredicateAst::Kind::And ? Predicate::Kind::And : Predicate::Kind::Or;
      node->left = resolve_predicate(*ast.left, schema);
      node->right = resolve_predicate(*ast.right, schema);
      break;
  }
  return node;
}

}  // namespace

std::unique_ptr<LogicalNode> analyze(const QueryAst &ast, const Schema &schema) {
  auto scan = std::make_unique<LogicalNode>();
  scan->kind = LogicalNode::Kind::Scan;
  scan->table = ast.from_table;

  std::unique_ptr<LogicalNode> plan = std::move(scan);

  if (ast.where) {
    auto filter = std::make_unique<LogicalNode>();
    filter->kind = LogicalNode::Kind::Filter;
    filter->predicate = resolve_predicate(*ast.where, schema);
    filter->child = std::move(plan);
    plan = std::move(filter);
  }

  if (ast.skyline) {
    auto node = std::make_unique<LogicalNode>();
    node->kind = LogicalNode::Kind::Skyline;
    node->spec.distinct = ast.skyline->distinct;
    node->spec.complete = ast.skyline->complete;
    for (const auto &[name, kind] : ast.skyline->items) {
      SkylineDimension dim;
      dim.column = resolve_column(schema, name, "SKYLINE OF clause");
      dim.kind = kind;
      node->spec.dims.push_back(dim);
    }
    node->spec.validate(schema);
    node->child = std::move(plan);
    plan = std::move(node);
  }

  auto project = std::make_unique<LogicalNode>();
  project->kind = LogicalNode::Kind::Project;
  if (ast.select_all) {
    for (size_t i = 0; i < schema.arity(); ++i) {
      project->columns.push_back(i);
      project->column_names.push_back(schema.column(i).name);
    }
  } else {
    for (const auto &name : ast.select_list) {
      size_t idx = resolve_column(schema, name, "select list");
      project->columns.push_back(idx);
      project->column_names.push_back(schema.column(idx).name);
    }
  }
  project->child = std::move(plan);
  plan = std::move(project);

  if (ast.order_by) {
    // ORDER BY addresses one output column of the projection.
    auto sort = std::make_unique<LogicalNode>();
    sort->kind = LogicalNode::Kind::Sort;
    std::string needle = to_lower(ast.order_by->column);
    std::optional<size_t> output_idx;
    for (size_t i = 0; i < plan->column_names.size(); ++i) {
      if (to_lower(plan->column_names[i]) == needle) {
        output_idx = i;
        break;
      }
    }
    if (!output_idx) {
      throw AnalysisError("ORDER BY column '" + ast.order_by->column +
                          "' is not part of the query output");
    }
    sort->sort_column = *output_idx;
    sort->sort_ascending = ast.order_by->ascending;
    sort->sort_column_name = plan->column_names[*output_idx];
    sort->child = std::move(plan);
    plan = std::move(sort);
  }

  return plan;
}

}  // namespace skyline
