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
#include "skyline/optimizer.hpp"

namespace skyline {

namespace {

bool single_dim_rule_applies(const LogicalNode &node, const Schema &schema) {
  if (node.kind != LogicalNode::Kind::Skyline) {
    return false;
  }
  const SkylineSpec &spec = node.spec;
  if (spec.dims.size() != 1 || spec.dims[0].kind == DimKind::Diff) {
    return false;
  }
  return spec.complete || !schema.column(spec.dims[0].column).nullable;
}

}  // namespace

std::unique_ptr<LogicalNode> optimize(std::unique_ptr<LogicalNode> plan, const Schema &schema) {
  if (!plan) {
    return plan;
  }
  if (single_dim_rule_applies(*plan, schema)) {
    auto replacement = std::make_unique<LogicalNode>();
    replacement->kind = LogicalNode::Kind::SingleDim;
    replacement->single_column = plan->spec.dims[0].column;
    replacement->single_kind = plan->spec.dims[0].kind;
    replacement->single_distinct = plan->spec.distinct;
    replacement->child = optimize(std::move(plan->child), schema);
    return replacement;
  }
  plan->child = optimize(std::move(plan->child), schema);
  return plan;
}

}  // namespace skyline
