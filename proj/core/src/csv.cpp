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
#include "skyline/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "skyline/error.hpp"

namespace skyline {

namespace {

/// One CSV field: raw content plus whether it was quoted (a bare empty
/// field is Null, a quoted empty field is an empty string).
struct Field {
  std::string text;
  bool quoted = false;
};

/// Reads one CSV record (possibly spanning lines inside quotes). Returns
/// false at end of input. `line_no` tracks the record's first line for
/// error reporting.
bool read_record(std::istream &in, std::vector<Field> &fields, size_t &line_no) {
  fields.clear();
  int c = in.get();
  if (c == EOF) {
    return false;
  }
  Field current;
  bool in_quotes = false;
  bool any = false;
  auto flush = [&]() {
    fields.push_back(std::move(current));
    current = Field{};
  };
  for (;;) {
    if (c == EOF) {
      flush();
      return true;
    }
    char ch = static_cast<char>(c);
    any = true;
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          current.text.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') {
          ++line_no;
        }
        current.text.push_back(ch);
      }
    } else if (ch == '"' && current.text.empty() && !current.quoted) {
      in_quotes = true;
      current.quoted = true;
    } else if (ch == ',') {
      flush();
    } else if (ch == '\n') {
      flush();
      ++line_no;
      return true;
    } else if (ch == '\r') {
      // swallow; \r\n ends the record below
      if (in.peek() == '\n') {
        in.get();
        flush();
        ++line_no;
        return true;
      }
      current.text.push_back(ch);
    } else {
      current.text.push_back(ch);
    }
    c = in.get();
  }
  (void)any;
}

Value parse_field(const Field &field, const ColumnType &column, size_t line_no) {
  if (field.text.empty() && !field.quoted) {
    if (!column.nullable) {
      throw IngestError("line " + std::to_string(line_no) + ": null value in non-nullable column '" +
                        column.name + "'");
    }
    return Value::null();
  }
  const std::string &s = field.text;
  switch (column.kind) {
    case ValueKind::Int: {
      int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw IngestError("line " + std::to_string(line_no) + ": cannot parse '" + s +
                          "' as int for column '" + column.name + "'");
      }
      return Value::integer(v);
    }
    case ValueKind::Float: {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw IngestError("line " + std::to_string(line_no) + ": cannot parse '" + s +
                          "' as float for column '" + column.name + "'");
      }
      if (std::isnan(v)) {
        throw IngestError("line " + std::to_string(line_no) + ": NaN float in column '" +
                          column.name + "'");
      }
      return Value::floating(v);
    }
    case ValueKind::Bool: {
      std::string lowered = to_lower(s);
      if (lowered == "true") {
        return Value::boolean(true);
      }
      if (lowered == "false") {
        return Value::boolean(false);
      }
      throw IngestError("line " + std::to_string(line_no) + ": cannot parse '" + s +
                        "' as bool for column '" + column.name + "'");
    }
    case ValueKind::Text:
      return Value::text(s);
  }
  throw EngineDefect("unreachable column kind");
}

bool parses_as_int(const std::string &s) {
  int64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parses_as_float(const std::string &s) {
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && ptr == s.data() + s.size() && !std::isnan(v);
}

bool parses_as_bool(const std::string &s) {
  std::string lowered = to_lower(s);
  return lowered == "true" || lowered == "false";
}

Schema infer_schema(const std::vector<Field> &header,
                    const std::vector<std::vector<Field>> &records) {
  std::vector<ColumnType> columns;
  for (size_t col = 0; col < header.size(); ++col) {
    ColumnType ct;
    ct.name = header[col].text;
    bool can_int = true, can_float = true, can_bool = true;
    bool saw_null = false;
    for (const auto &record : records) {
      const Field &field = record[col];
      if (field.text.empty() && !field.quoted) {
        saw_null = true;
        continue;
      }
      can_int = can_int && parses_as_int(field.text);
      can_float = can_float && parses_as_float(field.text);
      can_bool = can_bool && parses_as_bool(field.text);
    }
    if (can_int) {
      ct.kind = ValueKind::Int;
    } else if (can_float) {
      ct.kind = ValueKind::Float;
    } else if (can_bool) {
      ct.kind = ValueKind::Bool;
    } else {
      ct.kind = ValueKind::Text;
    }
    ct.nullable = saw_null;
    columns.push_back(std::move(ct));
  }
  return Schema(std::move(columns));
}

void quote_if_needed(const std::string &s, bool force_quotes, std::ostream &out) {
  bool needs = force_quotes || s.empty();
  if (!needs) {
    needs = s.find_first_of(",\"\r\n") != std::string::npos;
  }
  if (!needs) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') {
      out << "\"\"";
    } else {
      out << c;
    }
  }
  out << '"';
}

}  // namespace

Schema read_schema_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IngestError("cannot open schema file '" + path + "'");
  }
  std::vector<ColumnType> columns;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    size_t first = line.find(':');
    size_t second = first == std::string::npos ? std::string::npos : line.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw IngestError(path + " line " + std::to_string(line_no) +
                        ": expected 'name:type:nullable'");
    }
    ColumnType ct;
    ct.name = line.substr(0, first);
    auto kind = value_kind_from_name(line.substr(first + 1, second - first - 1));
    if (!kind) {
      throw IngestError(path + " line " + std::to_string(line_no) +
                        ": type must be one of int, float, bool, text");
    }
    ct.kind = *kind;
    std::string nullable = to_lower(line.substr(second + 1));
    if (nullable == "true") {
      ct.nullable = true;
    } else if (nullable == "false") {
      ct.nullable = false;
    } else {
      throw IngestError(path + " line " + std::to_string(line_no) +
                        ": nullable must be true or false");
    }
    columns.push_back(std::move(ct));
  }
  if (columns.empty()) {
    throw IngestError("schema file '" + path + "' declares no columns");
  }
  return Schema(std::move(columns));
}

void write_schema_file(const Schema &schema, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw ExecError("cannot write schema file '" + path + "'");
  }
  for (const auto &col : schema.columns()) {
    out << col.name << ":" << value_kind_name(col.kind) << ":"
        << (col.nullable ? "true" : "false") << "\n";
  }
}

Dataset ingest_csv(const std::string &path, const std::optional<Schema> &declared) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError("cannot open CSV file '" + path + "'");
  }

  size_t line_no = 1;
  std::vector<Field> header;
  if (!read_record(in, header, line_no)) {
    throw IngestError("CSV file '" + path + "' is empty (expected a header row)");
  }

  if (declared) {
    if (header.size() != declared->arity()) {
      throw IngestError("CSV header has " + std::to_string(header.size()) +
                        " columns but the schema declares " + std::to_string(declared->arity()));
    }
    for (size_t i = 0; i < header.size(); ++i) {
      if (to_lower(header[i].text) != to_lower(declared->column(i).name)) {
        throw IngestError("CSV header column '" + header[i].text + "' does not match schema column '" +
                          declared->column(i).name + "'");
      }
    }
  }

  std::vector<std::vector<Field>> records;
  std::vector<size_t> record_lines;
  std::vector<Field> record;
  size_t record_start = line_no;
  while (read_record(in, record, line_no)) {
    if (record.size() != header.size()) {
      throw IngestError("line " + std::to_string(record_start) + ": record has " +
                        std::to_string(record.size()) + " fields, expected " +
                        std::to_string(header.size()));
    }
    record_lines.push_back(record_start);
    records.push_back(std::move(record));
    record_start = line_no;
  }

  Dataset dataset;
  if (declared) {
    dataset.schema = *declared;
  } else {
    dataset.schema = infer_schema(header, records);
  }

  dataset.rows.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    Row row;
    row.ordinal = i;
    row.values.reserve(header.size());
    for (size_t col = 0; col < header.size(); ++col) {
      row.values.push_back(parse_field(records[i][col], dataset.schema.column(col), record_lines[i]));
    }
    dataset.rows.push_back(std::move(row));
  }
  return dataset;
}

void write_csv(const Dataset &dataset, std::ostream &out) {
  const auto &columns = dataset.schema.columns();
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    quote_if_needed(columns[i].name, false, out);
  }
  out << '\n';
  for (const Row &row : dataset.rows) {
    for (size_t i = 0; i < row.values.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      const Value &v = row.values[i];
      if (v.is_null()) {
        continue;  // null prints as an empty field
      }
      if (v.kind() == ValueKind::Text) {
        quote_if_needed(v.as_text(), v.as_text().empty(), out);
      } else {
        out << v.to_string();
      }
    }
    out << '\n';
  }
}

void write_csv_file(const Dataset &dataset, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ExecError("cannot write CSV file '" + path + "'");
  }
  write_csv(dataset, out);
}

}  // namespace skyline
