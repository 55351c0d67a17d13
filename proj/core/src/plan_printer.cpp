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
#include <sstream>

#include "skyline/plan.hpp"

namespace skyline {

namespace {

std::string spec_to_string(const SkylineSpec &spec, const Schema &schema) {
  std::string out;
  if (spec.distinct) {
    out += "DISTINCT ";
  }
  if (spec.complete) {
    out += "COMPLETE ";
  }
  for (size_t i = 0; i < spec.dims.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += schema.column(spec.dims[i].column).name;
    out += " ";
    out += dim_kind_name(spec.dims[i].kind);
  }
  return out;
}

std::string join_names(const std::vector<std::string> &names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += names[i];
  }
  return out;
}

std::string single_dim_label(size_t column, DimKind kind, bool distinct, const Schema &schema) {
  std::string out = kind == DimKind::Min ? "min" : "max";
  out += ", " + schema.column(column).name;
  if (distinct) {
    out += ", distinct";
  }
  return out;
}

void print_logical(const LogicalNode &node, const Schema &schema, int depth,
                   std::ostringstream &out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ');
  switch (node.kind) {
    case LogicalNode::Kind::Scan:
      out << "Scan(" << node.table << ")";
      break;
    case LogicalNode::Kind::Filter:
      out << "Filter(" << node.predicate->to_string() << ")";
      break;
    case LogicalNode::Kind::Project:
      out << "Project(" << join_names(node.column_names) << ")";
      break;
    case LogicalNode::Kind::Skyline:
      out << "Skyline(" << spec_to_string(node.spec, schema) << ")";
      break;
    case LogicalNode::Kind::SingleDim:
      out << "SingleDim("
          << single_dim_label(node.single_column, node.single_kind, node.single_distinct, schema)
          << ")";
      break;
    case LogicalNode::Kind::Sort:
      out << "Sort(" << node.sort_column_name << (node.sort_ascending ? " ASC" : " DESC") << ")";
      break;
  }
  out << "\n";
  if (node.child) {
    print_logical(*node.child, schema, depth + 1, out);
  }
}

void print_physical(const PhysicalNode &node, const Schema &schema, int depth,
                    std::ostringstream &out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ');
  switch (node.kind) {
    case PhysicalNode::Kind::ScanExec:
      out << "ScanExec(" << node.table << ")";
      break;
    case PhysicalNode::Kind::FilterExec:
      out << "FilterExec(" << node.predicate->to_string() << ")";
      break;
    case PhysicalNode::Kind::ProjectExec:
      out << "ProjectExec(" << join_names(node.column_names) << ")";
      break;
    case PhysicalNode::Kind::LocalSkylineExec:
      out << "LocalSkylineExec("
          << (node.distribution == Distribution::Unspecified ? "Unspecified" : "BySignature")
          << ": " << spec_to_string(node.spec, schema) << ")";
      break;
    case PhysicalNode::Kind::GlobalSkylineExec:
      out << "GlobalSkylineExec("
          << (node.variant == GlobalVariant::Complete ? "Complete" : "Incomplete") << ": "
          << spec_to_string(node.spec, schema) << ")";
      break;
    case PhysicalNode::Kind::SingleDimScanExec:
      out << "SingleDimScanExec("
          << single_dim_label(node.single_column, node.single_kind, node.single_distinct, schema)
          << ")";
      break;
    case PhysicalNode::Kind::ReferenceSkylineExec:
      out << "ReferenceSkylineExec(" << spec_to_string(node.spec, schema) << ")";
      break;
    case PhysicalNode::Kind::SortExec:
      out << "SortExec(" << node.sort_column_name << (node.sort_ascending ? " ASC" : " DESC")
          << ")";
      break;
  }
  out << "\n";
  if (node.child) {
    print_physical(*node.child, schema, depth + 1, out);
  }
}

}  // namespace

std::string logical_plan_to_string(const LogicalNode &root, const Schema &schema) {
  std::ostringstream out;
  print_logical(root, schema, 0, out);
  return out.str();
}

std::string physical_plan_to_string(const PhysicalNode &root, const Schema &schema) {
  std::ostringstream out;
  print_physical(root, schema, 0, out);
  return out.str();
}

}  // namespace skyline
