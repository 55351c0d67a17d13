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
#include "skyline/value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace skyline {

const char *value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int: return "int";
    case ValueKind::Float: return "float";
    case ValueKind::Bool: return "bool";
    case ValueKind::Text: return "text";
  }
  return "?";
}

std::optional<ValueKind> value_kind_from_name(const std::string &name) {
  std::string n = to_lower(name);
  if (n == "int") return ValueKind::Int;
  if (n == "float") return ValueKind::Float;
  if (n == "bool") return ValueKind::Bool;
  if (n == "text") return ValueKind::Text;
  return std::nullopt;
}

std::string Value::to_string() const {
  if (is_null()) {
    return "null";
  }
  switch (kind()) {
    case ValueKind::Int:
      return std::to_string(as_int());
    case ValueKind::Float: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), as_float());
      (void)ec;
      return std::string(buf, ptr);
    }
    case ValueKind::Bool:
      return as_bool() ? "true" : "false";
    case ValueKind::Text:
      return as_text();
  }
  return "?";
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Schema::Schema(std::vector<ColumnType> columns) : columns_(std::move(columns)) {
  std::unordered_set<std::string> seen;
  for (const auto &col : columns_) {
    if (!seen.insert(to_lower(col.name)).second) {
      throw IngestError("duplicate column name '" + col.name + "' in schema");
    }
  }
}

std::optional<size_t> Schema::find_column(const std::string &name) const {
  std::string needle = to_lower(name);
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (to_lower(columns_[i].name) == needle) {
      return i;
    }
  }
  return std::nullopt;
}

void check_conforms(const Value &value, const ColumnType &column) {
  if (value.is_null()) {
    if (!column.nullable) {
      throw IngestError("null value in non-nullable column '" + column.name + "'");
    }
    return;
  }
  if (value.kind() != column.kind) {
    throw IngestError("value of type " + std::string(value_kind_name(value.kind())) +
                      " does not match column '" + column.name + "' of type " +
                      value_kind_name(column.kind));
  }
}

}  // namespace skyline
