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

#include "roughmat/instance_io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace roughmat {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> string_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw InvalidInput(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      throw InvalidInput(path + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

struct RawInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> x;
};

RawInstance parse_structured(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("malformed document: expected an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "universe" && key != "blocks" && key != "x") {
      throw InvalidInput("unknown key '" + key + "'");
    }
  }
  for (const char* key : {"universe", "blocks", "x"}) {
    if (!doc.contains(key)) throw InvalidInput(std::string(key) + ": missing");
  }

  RawInstance raw;
  raw.universe = string_array(doc["universe"], "universe");
  if (!doc["blocks"].is_array()) throw InvalidInput("blocks: expected an array");
  for (std::size_t i = 0; i < doc["blocks"].size(); ++i) {
    raw.blocks.push_back(string_array(doc["blocks"][i], "blocks[" + std::to_string(i) + "]"));
  }
  raw.x = string_array(doc["x"], "x");
  return raw;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

RawInstance parse_line_based(const std::string& text) {
  RawInstance raw;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto colon = line.find(':');
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    if (colon == std::string::npos) {
      throw InvalidInput("malformed document: expected 'key: values' but got '" + trimmed + "'");
    }
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string rest = line.substr(colon + 1);
    if (!seen.insert(key).second) throw InvalidInput(key + ": duplicate key");

    if (key == "universe") {
      raw.universe = split_tokens(rest);
    } else if (key == "x") {
      raw.x = split_tokens(rest);
    } else if (key == "blocks") {
      std::string segment;
      std::istringstream parts(rest);
      while (std::getline(parts, segment, '|')) {
        auto tokens = split_tokens(segment);
        if (!tokens.empty()) raw.blocks.push_back(std::move(tokens));
      }
    } else {
      throw InvalidInput("unknown key '" + key + "'");
    }
  }
  if (!seen.count("universe")) throw InvalidInput("universe: missing");
  if (!seen.count("blocks")) throw InvalidInput("blocks: missing");
  if (!seen.count("x")) throw InvalidInput("x: missing");
  return raw;
}

ParametricInstance build_instance(const RawInstance& raw) {
  if (raw.universe.empty()) throw InvalidInput("universe: must be nonempty");
  UniversePtr universe;
  try {
    universe = make_universe(raw.universe);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("universe: ") + e.what());
  }

  std::vector<Subset> blocks;
  std::vector<bool> covered(universe->size(), false);
  for (std::size_t b = 0; b < raw.blocks.size(); ++b) {
    const std::string path = "blocks[" + std::to_string(b) + "]";
    if (raw.blocks[b].empty()) throw InvalidInput(path + ": empty block");
    Subset block = Subset::empty_set(universe);
    for (const std::string& id : raw.blocks[b]) {
      auto idx = universe->index_of(id);
      if (!idx) throw InvalidInput(path + ": unknown element '" + id + "'");
      if (covered[*idx]) {
        throw InvalidInput("invalid partition: element '" + id + "' duplicated at " + path);
      }
      covered[*idx] = true;
      block.add(*idx);
    }
    blocks.push_back(std::move(block));
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) {
      throw InvalidInput("invalid partition: element '" + universe->id_of(i) +
                         "' not covered by blocks");
    }
  }

  Subset x = Subset::empty_set(universe);
  for (std::size_t i = 0; i < raw.x.size(); ++i) {
    auto idx = universe->index_of(raw.x[i]);
    if (!idx) {
      throw InvalidInput("x[" + std::to_string(i) + "]: element '" + raw.x[i] +
                         "' is not a subset of the universe");
    }
    x.add(*idx);
  }

  return ParametricInstance(ApproximationSpace(Partition(universe, std::move(blocks))),
                            std::move(x));
}

}  // namespace

ParametricInstance parse_instance_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("malformed document: empty input");
  const RawInstance raw =
      (text[first] == '{') ? parse_structured(text) : parse_line_based(text);
  return build_instance(raw);
}

std::string serialize_instance(const ParametricInstance& inst) {
  json doc;
  doc["universe"] = inst.universe()->ids();
  json blocks = json::array();
  for (const Subset& block : inst.space().partition().blocks()) blocks.push_back(block.ids());
  doc["blocks"] = blocks;
  doc["x"] = inst.x().ids();
  return doc.dump(2) + "\n";
}

std::string instance_digest(const ParametricInstance& inst) {
  const std::string canonical = serialize_instance(inst);
  std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV offset basis
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;  // FNV prime
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace roughmat
