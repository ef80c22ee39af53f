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

#include "roughmat/core.hpp"
#include "roughmat/partition.hpp"
#include "roughmat/relation.hpp"

namespace roughmat {

// Canonical, byte-stable text forms. Elements appear in universe order,
// family members in canonical order, partition blocks in block order.

std::string format_subset(const Subset& s);                 // {1,3} / {}
std::string format_family_inline(const SetFamily& f);       // {{},{1},{2}}
std::string format_family_lines(const SetFamily& f);        // one set per line
std::string format_partition(const Partition& p);           // {{1,2},{3}}
std::string format_relation(const BinaryRelation& r);       // {(1,2),(3,1)}

}  // namespace roughmat
