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

#include <vector>

#include "roughmat/core.hpp"

namespace roughmat {

/// Canonical form of an equivalence relation: disjoint nonempty blocks
/// covering the universe, ordered ascending by smallest element index.
class Partition {
 public:
  /// Validates disjointness, nonemptiness and cover; throws InvalidInput.
  Partition(UniversePtr universe, std::vector<Subset> blocks);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Index into blocks() of the block containing the element.
  std::size_t block_of(std::size_t element) const { return element_block_.at(element); }

  bool operator==(const Partition& other) const;

 private:
  UniversePtr universe_;
  std::vector<Subset> blocks_;
  std::vector<std::size_t> element_block_;
};

/// Builds a partition from blocks given as identifier lists.
Partition partition_from_ids(UniversePtr universe,
                             const std::vector<std::vector<std::string>>& blocks);

}  // namespace roughmat
