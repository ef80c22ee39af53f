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

#include "roughmat/format.hpp"

namespace roughmat {

std::string format_subset(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& id : s.ids()) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  out += "}";
  return out;
}

std::string format_family_inline(const SetFamily& f) {
  std::string out = "{";
  bool first = true;
  for (const Subset& s : f) {
    if (!first) out += ",";
    out += format_subset(s);
    first = false;
  }
  out += "}";
  return out;
}

std::string format_family_lines(const SetFamily& f) {
  std::string out;
  for (const Subset& s : f) {
    out += format_subset(s);
    out += "\n";
  }
  return out;
}

std::string format_partition(const Partition& p) {
  std::string out = "{";
  bool first = true;
  for (const Subset& block : p.blocks()) {
    if (!first) out += ",";
    out += format_subset(block);
    first = false;
  }
  out += "}";
  return out;
}

std::string format_relation(const BinaryRelation& r) {
  const Universe& u = *r.universe();
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ",";
    out += "(" + u.id_of(a) + "," + u.id_of(b) + ")";
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace roughmat
