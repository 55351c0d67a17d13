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

#include <iosfwd>
#include <optional>
#include <string>

#include "skyline/catalog.hpp"

namespace skyline {

/// Reads a schema file: one `name:type:nullable` line per column with
/// type in {int,float,bool,text} and nullable in {true,false}. Blank lines
/// and lines starting with '#' are skipped.
Schema read_schema_file(const std::string &path);
void write_schema_file(const Schema &schema, const std::string &path);

/// Ingests an RFC-4180-style CSV file with a header row. An unquoted empty
/// field is Null; a quoted empty field is an empty text value. With a
/// declared schema the header names must match it; without one, column
/// types are inferred in the order int -> float -> bool -> text and a
/// column is nullable iff a Null was observed. NaN floats are rejected.
Dataset ingest_csv(const std::string &path, const std::optional<Schema> &declared = std::nullopt);

/// Writes a dataset as CSV with a header row: Null as an empty field, text
/// quoted when needed (or empty), floats in shortest round-trip form.
void write_csv(const Dataset &dataset, std::ostream &out);
void write_csv_file(const Dataset &dataset, const std::string &path);

}  // namespace skyline
