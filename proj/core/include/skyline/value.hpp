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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skyline/error.hpp"

namespace skyline {

enum class ValueKind : uint8_t { Int, Float, Bool, Text };

const char *value_kind_name(ValueKind kind);
std::optional<ValueKind> value_kind_from_name(const std::string &name);

/// A single nullable cell. Floats are never NaN: ingestion rejects NaN so
/// that every column has a total order. The representation is a 16-byte
/// tagged union (text is heap-allocated); dominance testing is memory-bound
/// over millions of cells, so cell size matters more than anything else.
class Value {
 public:
  Value() : tag_(Tag::Null), int_(0) {}

  Value(const Value &other) { copy_from(other); }
  Value(Value &&other) noexcept : tag_(other.tag_), int_(other.int_) {
    other.tag_ = Tag::Null;
  }
  Value &operator=(const Value &other) {
    if (this != &other) {
      destroy();
      copy_from(other);
    }
    return *this;
  }
  Value &operator=(Value &&other) noexcept {
    if (this != &other) {
      destroy();
      tag_ = other.tag_;
      int_ = other.int_;
      other.tag_ = Tag::Null;
    }
    return *this;
  }
  ~Value() { destroy(); }

  static Value null() { return Value(); }
  static Value integer(int64_t v) {
    Value out;
    out.tag_ = Tag::Int;
    out.int_ = v;
    return out;
  }
  static Value floating(double v) {
    if (std::isnan(v)) {
      throw IngestError("NaN float value is not representable");
    }
    Value out;
    out.tag_ = Tag::Float;
    out.float_ = v;
    return out;
  }
  static Value boolean(bool v) {
    Value out;
    out.tag_ = Tag::Bool;
    out.bool_ = v;
    return out;
  }
  static Value text(std::string v) {
    Value out;
    out.tag_ = Tag::Text;
    out.text_ = new std::string(std::move(v));
    return out;
  }

  bool is_null() const { return tag_ == Tag::Null; }

  /// Kind of a non-null value; calling this on Null is a defect.
  ValueKind kind() const {
    switch (tag_) {
      case Tag::Int: return ValueKind::Int;
      case Tag::Float: return ValueKind::Float;
      case Tag::Bool: return ValueKind::Bool;
      case Tag::Text: return ValueKind::Text;
      case Tag::Null: break;
    }
    throw EngineDefect("kind() called on null value");
  }

  int64_t as_int() const { return int_; }
  double as_float() const { return float_; }
  bool as_bool() const { return bool_; }
  const std::string &as_text() const { return *text_; }

  /// Structural equality; Null == Null holds. Used for DISTINCT equivalence
  /// classes, not for dominance (dominance treats Null as incomparable).
  bool operator==(const Value &other) const {
    if (tag_ != other.tag_) {
      return false;
    }
    switch (tag_) {
      case Tag::Null: return true;
      case Tag::Int: return int_ == other.int_;
      case Tag::Float: return float_ == other.float_;
      case Tag::Bool: return bool_ == other.bool_;
      case Tag::Text: return *text_ == *other.text_;
    }
    return false;
  }

  std::string to_string() const;

 private:
  enum class Tag : uint8_t { Null, Int, Float, Bool, Text };

  void destroy() {
    if (tag_ == Tag::Text) {
      delete text_;
    }
  }
  void copy_from(const Value &other) {
    tag_ = other.tag_;
    if (tag_ == Tag::Text) {
      text_ = new std::string(*other.text_);
    } else {
      int_ = other.int_;
    }
  }

  Tag tag_;
  union {
    int64_t int_;
    double float_;
    bool bool_;
    std::string *text_;
  };
};

struct ColumnType {
  std::string name;
  ValueKind kind = ValueKind::Int;
  bool nullable = false;

  bool operator==(const ColumnType &) const = default;
};

/// Ordered list of columns. Names are unique; lookup is case-insensitive.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<ColumnType> columns);

  const std::vector<ColumnType> &columns() const { return columns_; }
  const ColumnType &column(size_t i) const { return columns_[i]; }
  size_t arity() const { return columns_.size(); }

  std::optional<size_t> find_column(const std::string &name) const;

  bool operator==(const Schema &) const = default;

 private:
  std::vector<ColumnType> columns_;
};

/// ASCII-lowercase used for all case-insensitive identifier handling.
std::string to_lower(std::string s);

/// One tuple. `ordinal` is the position in the ingested input and is unique
/// within a dataset; it is the deterministic tie-breaker for DISTINCT.
struct Row {
  std::vector<Value> values;
  uint64_t ordinal = 0;
};

/// Checks that `value` conforms to `column` (type and nullability); throws
/// IngestError naming the column otherwise.
void check_conforms(const Value &value, const ColumnType &column);

}  // namespace skyline
