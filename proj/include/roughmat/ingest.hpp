// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "roughmat/core.hpp"
#include "roughmat/partition.hpp"

namespace roughmat {

/// A rectangular table of categorical values: rows are objects, columns are
/// attributes. Values are nominal symbols compared as exact strings; missing
/// cells are a hard error at construction.
class InformationTable {
 public:
  InformationTable(std::vector<std::string> objects, std::vector<std::string> attributes,
                   std::vector<std::vector<std::string>> rows);

  /// Parses CSV text with a header row. The object identifier column is the
  /// first one unless `id_column` names another. Fields follow the usual
  /// quoting convention: double quotes, doubled to escape; unquoted cells
  /// are trimmed of surrounding whitespace.
  static InformationTable from_csv(const std::string& text, const std::string& id_column = "");

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const UniversePtr& object_universe() const { return universe_; }

  const std::string& value(std::size_t object, std::size_t attribute) const;
  std::size_t attribute_index(const std::string& name) const;  // throws InvalidInput

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> rows_;  // rows_[object][attribute]
  UniversePtr universe_;
};

/// Objects fall in the same block iff they agree on every listed attribute.
/// Refining the attribute set never coarsens the partition.
Partition indiscernibility_partition(const InformationTable& table,
                                     const std::vector<std::string>& attributes);

/// The objects whose `decision_attribute` equals `value` — a ready-made
/// parameter set for a parametric instance.
Subset decision_target(const InformationTable& table, const std::string& decision_attribute,
                       const std::string& value);

/// Splits CSV text into rows of fields. Exposed for reuse by the CLI.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace roughmat
