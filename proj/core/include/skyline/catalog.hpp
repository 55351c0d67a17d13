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

#include <map>
#include <string>
#include <vector>

#include "skyline/value.hpp"

namespace skyline {

/// An in-memory table: rows conform to the schema and carry ordinals
/// 0..n-1 in input order.
struct Dataset {
  Schema schema;
  std::vector<Row> rows;
};

/// Registered tables, looked up case-insensitively.
class Catalog {
 public:
  void register_table(const std::string &name, Dataset dataset) {
    tables_[to_lower(name)] = std::move(dataset);
  }

  const Dataset *find(const std::string &name) const {
    auto it = tables_.find(to_lower(name));
    return it == tables_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Dataset> tables_;
};

}  // namespace skyline
