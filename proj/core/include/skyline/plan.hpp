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
#include <vector>

#include "skyline/ast.hpp"
#include "skyline/skyline_spec.hpp"

namespace skyline {

/// Resolved boolean predicate over schema column indices. Evaluates with
/// three-valued logic: nullopt is SQL's "unknown"; a row passes a filter
/// only when the predicate is definitely true.
struct Predicate {
  enum class Kind : uint8_t { Comparison, And, Or, Not };

  Kind kind = Kind::Comparison;
  size_t column = 0;        // Comparison only
  std::string column_name;  // for plan printing
  CmpOp op = CmpOp::Eq;
  Value literal;
  std::unique_ptr<Predicate> left;
  std::unique_ptr<Predicate> right;

  std::optional<bool> evaluate(const Row &row) const;
  std::unique_ptr<Predicate> clone() const;
  bool equals(const Predicate &other) const;
  std::string to_string() const;
};

/// Logical operator tree. Single-child chain: Scan is the only leaf and the
/// skyline operator is one node with one child.
struct LogicalNode {
  enum class Kind : uint8_t { Scan, Filter, Project, Skyline, SingleDim, Sort };

  Kind kind = Kind::Scan;
  std::unique_ptr<LogicalNode> child;  // null for Scan

  // Scan
  std::string table;
  // Filter
  std::unique_ptr<Predicate> predicate;
  // Project
  std::vector<size_t> columns;
  std::vector<std::string> column_names;
  // Skyline
  SkylineSpec spec;
  // SingleDim: skyline collapsed to a scalar extreme scan
  size_t single_column = 0;
  DimKind single_kind = DimKind::Min;
  bool single_distinct = false;
  // Sort (column index into the projected output)
  size_t sort_column = 0;
  bool sort_ascending = true;
  std::string sort_column_name;

  std::unique_ptr<LogicalNode> clone() const;
  bool equals(const LogicalNode &other) const;
};

enum class Distribution : uint8_t { Unspecified, BySignature };
enum class GlobalVariant : uint8_t { Complete, Incomplete };

/// Physical operator tree. A distributed skyline lowers to a
/// GlobalSkylineExec whose only child is a LocalSkylineExec; the
/// non-distributed variant, SingleDimScanExec and ReferenceSkylineExec
/// stand alone. The global node always executes on a single worker.
struct PhysicalNode {
  enum class Kind : uint8_t {
    ScanExec, FilterExec, ProjectExec,
    LocalSkylineExec, GlobalSkylineExec,
    SingleDimScanExec, ReferenceSkylineExec,
    SortExec,
  };

  Kind kind = Kind::ScanExec;
  std::unique_ptr<PhysicalNode> child;

  std::string table;
  std::unique_ptr<Predicate> predicate;
  std::vector<size_t> columns;
  std::vector<std::string> column_names;
  SkylineSpec spec;
  Distribution distribution = Distribution::Unspecified;
  GlobalVariant variant = GlobalVariant::Complete;
  size_t single_column = 0;
  DimKind single_kind = DimKind::Min;
  bool single_distinct = false;
  size_t sort_column = 0;
  bool sort_ascending = true;
  std::string sort_column_name;
};

/// Text tree renderings, root first, two-space indent per level.
std::string logical_plan_to_string(const LogicalNode &root, const Schema &schema);
std::string physical_plan_to_string(const PhysicalNode &root, const Schema &schema);

}  // namespace skyline
