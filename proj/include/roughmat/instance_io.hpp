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

#include "roughmat/parametric.hpp"

namespace roughmat {

/// Parses an instance document. Two forms are accepted:
///
/// Structured (JSON object with exactly these keys):
///   {"universe": ["1","2","3"], "blocks": [["1","2"],["3"]], "x": ["1"]}
///
/// Line-based, for hand-authoring ('#' starts a comment):
///   universe: 1 2 3
///   blocks: 1 2 | 3
///   x: 1
///
/// Validation failures carry the path of the offending field, e.g.
/// "blocks[1]".
ParametricInstance parse_instance_document(const std::string& text);

/// Canonical structured serialization; parse of the output reproduces the
/// instance exactly.
std::string serialize_instance(const ParametricInstance& inst);

/// FNV-1a 64-bit digest of the canonical serialization, as 16 hex digits.
std::string instance_digest(const ParametricInstance& inst);

}  // namespace roughmat
