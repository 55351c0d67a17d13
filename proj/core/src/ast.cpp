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
#include "skyline/ast.hpp"

#include <sstream>

namespace skyline {

const char *cmp_op_symbol(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::NotEq: return "<>";
    case CmpOp::Lt: return "<";
    case CmpOp::LtEq: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::GtEq: return ">=";
  }
  return "?";
}

namespace {

std::string literal_to_sql(const Value &v) {
  if (v.is_null()) {
    return "NULL";  // not producible by the grammar; defensive printing only
  }
  switch (v.kind()) {
    case ValueKind::Text: {
      std::string out = "'";
      for (char c : v.as_text()) {
        if (c == '\'') {
          out += "''";
        } else {
          out.push_back(c);
        }
      }
      out += "'";
      return out;
    }
    case ValueKind::Float: {
      // Keep a float marker so the round trip stays a float literal.
      std::string s = v.to_string();
      if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
          s.find('E') == std::string::npos) {
        s += ".0";
      }
      return s;
    }
    default:
      return v.to_string();
  }
}

}  // namespace

bool PredicateAst::equals(const PredicateAst &other) const {
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

std::string PredicateAst::to_sql() const {
  switch (kind) {
    case Kind::Comparison:
      return column + " " + cmp_op_symbol(op) + " " + literal_to_sql(literal);
    case Kind::Not:
      return "NOT (" + left->to_sql() + ")";
    case Kind::And:
      return "(" + left->to_sql() + " AND " + right->to_sql() + ")";
    case Kind::Or:
      return "(" + left->to_sql() + " OR " + right->to_sql() + ")";
  }
  return "?";
}

bool QueryAst::equals(const QueryAst &other) const {
  if (select_all != other.select_all || select_list != other.select_list ||
      from_table != other.from_table || skyline != other.skyline ||
      order_by != other.order_by) {
    return false;
  }
  if ((where == nullptr) != (other.where == nullptr)) {
    return false;
  }
  return where == nullptr || where->equals(*other.where);
}

std::string QueryAst::to_sql() const {
  std::ostringstream out;
  out << "SELECT ";
  if (select_all) {
    out << "*";
  } else {
    for (size_t i = 0; i < select_list.size(); ++i) {
      if (i > 0) {
        out << ", ";
      }
      out << select_list[i];
    }
  }
  out << " FROM " << from_table;
  if (where) {
    out << " WHERE " << where->to_sql();
  }
  if (skyline) {
    out << " SKYLINE OF ";
    if (skyline->distinct) {
      out << "DISTINCT ";
    }
    if (skyline->complete) {
      out << "COMPLETE ";
    }
    for (size_t i = 0; i < skyline->items.size(); ++i) {
      if (i > 0) {
        out << ", ";
      }
      out << skyline->items[i].first << " " << dim_kind_name(skyline->items[i].second);
    }
  }
  if (order_by) {
    out << " ORDER BY " << order_by->column << (order_by->ascending ? " ASC" : " DESC");
  }
  return out.str();
}

}  // namespace skyline
