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
#include "skyline/plan.hpp"

#include "skyline/error.hpp"

namespace skyline {

namespace {

/// Total comparison of a non-null row value against the (type-matching)
/// literal: negative, zero or positive.
int compare_for_predicate(const Value &v, const Value &literal) {
  switch (v.kind()) {
    case ValueKind::Int: {
      int64_t a = v.as_int(), b = literal.as_int();
      return a < b ? -1 : (a > b ? 1 : 0);
    }
    case ValueKind::Float: {
      double a = v.as_float(), b = literal.as_float();
      return a < b ? -1 : (a > b ? 1 : 0);
    }
    case ValueKind::Bool:
      return static_cast<int>(v.as_bool()) - static_cast<int>(literal.as_bool());
    case ValueKind::Text:
      return v.as_text().compare(literal.as_text());
  }
  return 0;
}

bool apply_op(int cmp, CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return cmp == 0;
    case CmpOp::NotEq: return cmp != 0;
    case CmpOp::Lt: return cmp < 0;
    case CmpOp::LtEq: return cmp <= 0;
    case CmpOp::Gt: return cmp > 0;
    case CmpOp::GtEq: return cmp >= 0;
  }
  return false;
}

}  // namespace

std::optional<bool> Predicate::evaluate(const Row &row) const {
  switch (kind) {
    case Kind::Comparison: {
      const Value &v = row.values[column];
      if (v.is_null()) {
        return std::nullopt;  // unknown
      }
      return apply_op(compare_for_predicate(v, literal), op);
    }
    case Kind::Not: {
      auto inner = left->evaluate(row);
      if (!inner) {
        return std::nullopt;
      }
      return !*inner;
    }
    case Kind::And: {
      auto a = left->evaluate(row);
      auto b = right->evaluate(row);
      if (a.has_value() && !*a) return false;
      if (b.has_value() && !*b) return false;
      if (a.has_value() && b.has_value()) return true;
      return std::nullopt;
    }
    case Kind::Or: {
      auto a = left->evaluate(row);
      auto b = right->evaluate(row);
      if (a.has_value() && *a) return true;
      if (b.has_value() && *b) return true;
      if (a.has_value() && b.has_value()) return false;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::unique_ptr<Predicate> Predicate::clone() const {
  auto copy = std::make_unique<Predicate>();
  copy->kind = kind;
  copy->column = column;
  copy->column_name = column_name;
  copy->op = op;
  copy->literal = literal;
  if (left) {
    copy->left = left->clone();
  }
  if (right) {
    copy->right = right->clone();
  }
  return copy;
}

bool Predicate::equals(const Predicate &other) const {
  if (kind != other.kind) {
    return false;
  }
  switch (kind) {
    case Kind::Comparison:
      return column == other.column && op == other.op && literal == other.literal;
    case Kind::Not:
      return left->equals(*other.left);
    case Kind::And:
    case Kind::Or:
      return left->equals(*other.left) && right->equals(*other.right);
  }
  return false;
}

std::string Predicate::to_string() const {
  switch (kind) {
    case Kind::Comparison:
      return column_name + " " + cmp_op_symbol(op) + " " + literal.to_string();
    case Kind::Not:
      return "NOT (" + left->to_string() + ")";
    case Kind::And:
      return "(" + left->to_string() + " AND " + right->to_string() + ")";
    case Kind::Or:
      return "(" + left->to_string() + " OR " + right->to_string() + ")";
  }
  return "?";
}

std::unique_ptr<LogicalNode> LogicalNode::clone() const {
  auto copy = std::make_unique<LogicalNode>();
  copy->kind = kind;
  if (child) {
    copy->child = child->clone();
  }
  copy->table = table;
  if (predicate) {
    copy->predicate = predicate->clone();
  }
  copy->columns = columns;
  copy->column_names = column_names;
  copy->spec = spec;
  copy->single_column = single_column;
  copy->single_kind = single_kind;
  copy->single_distinct = single_distinct;
  copy->sort_column = sort_column;
  copy->sort_ascending = sort_ascending;
  copy->sort_column_name = sort_column_name;
  return copy;
}

bool LogicalNode::equals(const LogicalNode &other) const {
  if (kind != other.kind) {
    return false;
  }
  if ((child == nullptr) != (other.child == nullptr)) {
    return false;
  }
  if (child && !child->equals(*other.child)) {
    return false;
  }
  switch (kind) {
    case Kind::Scan:
      return table == other.table;
    case Kind::Filter:
      return predicate->equals(*other.predicate);
    case Kind::Project:
      return columns == other.columns;
    case Kind::Skyline:
      return spec == other.spec;
    case Kind::SingleDim:
      return single_column == other.single_column && single_kind == other.single_kind &&
             single_distinct == other.single_distinct;
    case Kind::Sort:
      return sort_column == other.sort_column && sort_ascending == other.sort_ascending;
  }
  return false;
}

}  // namespace skyline
