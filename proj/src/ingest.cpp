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

#include "roughmat/ingest.hpp"

#include <algorithm>
#include <map>

namespace roughmat {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;

  auto end_field = [&] {
    row.push_back(field_was_quoted ? field : trim(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    // Skip rows that are entirely empty (trailing newline, blank lines).
    if (row.size() > 1 || !row[0].empty()) rows.push_back(row);
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_row();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw InvalidInput("csv: unterminated quoted field");
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

InformationTable::InformationTable(std::vector<std::string> objects,
                                   std::vector<std::string> attributes,
                                   std::vector<std::vector<std::string>> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  if (rows_.size() != objects_.size()) {
    throw InvalidInput("information table: one value row required per object");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != attributes_.size()) {
      throw InvalidInput("information table: row '" + objects_[r] + "' has " +
                         std::to_string(rows_[r].size()) + " values, expected " +
                         std::to_string(attributes_.size()));
    }
  }
  universe_ = make_universe(objects_);  // rejects duplicates and empty
}

InformationTable InformationTable::from_csv(const std::string& text,
                                            const std::string& id_column) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw InvalidInput("csv: missing header row");
  std::vector<std::string> header = rows.front();

  std::size_t id_index = 0;
  if (!id_column.empty()) {
    auto it = std::find(header.begin(), header.end(), id_column);
    if (it == header.end()) {
      throw InvalidInput("csv: identifier column '" + id_column + "' not found in header");
    }
    id_index = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::string> attributes;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != id_index) attributes.push_back(header[c]);
  }

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw InvalidInput("csv: row " + std::to_string(r + 1) + " has " +
                         std::to_string(row.size()) + " fields, expected " +
                         std::to_string(header.size()));
    }
    objects.push_back(row[id_index]);
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != id_index) cells.push_back(row[c]);
    }
    values.push_back(std::move(cells));
  }
  return InformationTable(std::move(objects), std::move(attributes), std::move(values));
}

const std::string& InformationTable::value(std::size_t object, std::size_t attribute) const {
  return rows_.at(object).at(attribute);
}

std::size_t InformationTable::attribute_index(const std::string& name) const {
  auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) {
    throw InvalidInput("unknown attribute '" + name + "'");
  }
  return static_cast<std::size_t>(it - attributes_.begin());
}

Partition indiscernibility_partition(const InformationTable& table,
                                     const std::vector<std::string>& attributes) {
  if (attributes.empty()) {
    throw InvalidInput("indiscernibility_partition: attribute set must be nonempty");
  }
  std::vector<std::size_t> columns;
  for (const auto& name : attributes) columns.push_back(table.attribute_index(name));

  std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
  for (std::size_t obj = 0; obj < table.objects().size(); ++obj) {
    std::vector<std::string> key;
    key.reserve(columns.size());
    for (std::size_t c : columns) key.push_back(table.value(obj, c));
    groups[key].push_back(obj);
  }

  const UniversePtr& universe = table.object_universe();
  std::vector<Subset> blocks;
  for (const auto& [key, members] : groups) {
    blocks.push_back(Subset::of_indices(universe, members));
  }
  return Partition(universe, std::move(blocks));
}

Subset decision_target(const InformationTable& table, const std::string& decision_attribute,
                       const std::string& value) {
  const std::size_t column = table.attribute_index(decision_attribute);
  Subset out = Subset::empty_set(table.object_universe());
  for (std::size_t obj = 0; obj < table.objects().size(); ++obj) {
    if (table.value(obj, column) == value) out.add(obj);
  }
  return out;
}

}  // namespace roughmat
