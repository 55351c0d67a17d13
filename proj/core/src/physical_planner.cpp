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
#include "skyline/physical_planner.hpp"

#include "skyline/error.hpp"

namespace skyline {

const char *algorithm_choice_name(AlgorithmChoice choice) {
  switch (choice) {
    case AlgorithmChoice::Auto: return "auto";
    case AlgorithmChoice::DistributedComplete: return "distributed-complete";
    case AlgorithmChoice::NondistributedComplete: return "nondistributed-complete";
    case AlgorithmChoice::DistributedIncomplete: return "distributed-incomplete";
    case AlgorithmChoice::Reference: return "reference";
  }
  return "?";
}

std::optional<AlgorithmChoice> algorithm_choice_from_name(const std::string &name) {
  std::string n = to_lower(name);
  if (n == "auto") return AlgorithmChoice::Auto;
  if (n == "distributed-complete") return AlgorithmChoice::DistributedComplete;
  if (n == "nondistributed-complete") return AlgorithmChoice::NondistributedComplete;
  if (n == "distributed-incomplete") return AlgorithmChoice::DistributedIncomplete;
  if (n == "reference") return AlgorithmChoice::Reference;
  return std::nullopt;
}

namespace {

std::unique_ptr<PhysicalNode> make_node(PhysicalNode::Kind kind,
                                        std::unique_ptr<PhysicalNode> child) {
  auto node = std::make_unique<PhysicalNode>();
  node->kind = kind;
  node->child = std::move(child);
  return node;
}

std::unique_ptr<PhysicalNode> lower_skyline(const SkylineSpec &spec, const Schema &schema,
                                            AlgorithmChoice mode,
                                            std::unique_ptr<PhysicalNode> input) {
  bool nullable = spec.any_dim_nullable(schema);
  bool complete_safe = spec.complete || !nullable;

  AlgorithmChoice choice = mode;
  if (choice == AlgorithmChoice::Auto) {
    choice = complete_safe ? AlgorithmChoice::DistributedComplete
                           : AlgorithmChoice::DistributedIncomplete;
  }

  switch (choice) {
    case AlgorithmChoice::DistributedComplete:
    case AlgorithmChoice::NondistributedComplete: {
      if (!complete_safe) {
        throw PlanError(
            std::string("cannot force the ") + algorithm_choice_name(choice) +
            " algorithm: a skyline dimension is nullable and the query does not assert "
            "COMPLETE; correctness depends on whether nulls actually appear, so only the "
            "COMPLETE keyword in the query may override");
      }
      std::unique_ptr<PhysicalNode> stage = std::move(input);
      if (choice == AlgorithmChoice::DistributedComplete) {
        auto local = make_node(PhysicalNode::Kind::LocalSkylineExec, std::move(stage));
        local->distribution = Distribution::Unspecified;
        local->spec = spec;
        stage = std::move(local);
      }
      auto global = make_node(PhysicalNode::Kind::GlobalSkylineExec, std::move(stage));
      global->variant = GlobalVariant::Complete;
      global->spec = spec;
      return global;
    }
    case AlgorithmChoice::DistributedIncomplete: {
      auto local = make_node(PhysicalNode::Kind::LocalSkylineExec, std::move(input));
      local->distribution = Distribution::BySignature;
      local->spec = spec;
      auto global = make_node(PhysicalNode::Kind::GlobalSkylineExec, std::move(local));
      global->variant = GlobalVariant::Incomplete;
      global->spec = spec;
      return global;
    }
    case AlgorithmChoice::Reference: {
      auto node = make_node(PhysicalNode::Kind::ReferenceSkylineExec, std::move(input));
      node->spec = spec;
      return node;
    }
    case AlgorithmChoice::Auto:
      break;
  }
  throw EngineDefect("unreachable algorithm choice");
}

std::unique_ptr<PhysicalNode> lower(const LogicalNode &node, const Schema &schema,
                                    AlgorithmChoice mode, bool &saw_skyline) {
  std::unique_ptr<PhysicalNode> child;
  if (node.child) {
    child = lower(*node.child, schema, mode, saw_skyline);
  }

  switch (node.kind) {
    case LogicalNode::Kind::Scan: {
      auto scan = make_node(PhysicalNode::Kind::ScanExec, nullptr);
      scan->table = node.table;
      return scan;
    }
    case LogicalNode::Kind::Filter: {
      auto filter = make_node(PhysicalNode::Kind::FilterExec, std::move(child));
      filter->predicate = node.predicate->clone();
      return filter;
    }
    case LogicalNode::Kind::Project: {
      auto project = make_node(PhysicalNode::Kind::ProjectExec, std::move(child));
      project->columns = node.columns;
      project->column_names = node.column_names;
      return project;
    }
    case LogicalNode::Kind::Skyline:
      saw_skyline = true;
      return lower_skyline(node.spec, schema, mode, std::move(child));
    case LogicalNode::Kind::SingleDim: {
      saw_skyline = true;
      auto scan = make_node(PhysicalNode::Kind::SingleDimScanExec, std::move(child));
      scan->single_column = node.single_column;
      scan->single_kind = node.single_kind;
      scan->single_distinct = node.single_distinct;
      return scan;
    }
    case LogicalNode::Kind::Sort: {
      auto sort = make_node(PhysicalNode::Kind::SortExec, std::move(child));
      sort->sort_column = node.sort_column;
      sort->sort_ascending = node.sort_ascending;
      sort->sort_column_name = node.sort_column_name;
      return sort;
    }
  }
  throw EngineDefect("unreachable logical node kind");
}

}  // namespace

std::unique_ptr<PhysicalNode> select_algorithm(const LogicalNode &plan, const Schema &schema,
                                               AlgorithmChoice mode) {
  bool saw_skyline = false;
  auto physical = lower(plan, schema, mode, saw_skyline);
  if (mode != AlgorithmChoice::Auto && !saw_skyline) {
    throw PlanError("a skyline algorithm was forced but the query has no SKYLINE OF clause");
  }
  return physical;
}

}  // namespace skyline
