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

#include "roughmat/partition.hpp"

#include <algorithm>

namespace roughmat {

Partition::Partition(UniversePtr universe, std::vector<Subset> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  const std::size_t n = universe_->size();
  element_block_.assign(n, blocks_.size());

  for (const Subset& block : blocks_) {
    if (!same_universe(block.universe(), universe_)) {
      throw UniverseMismatch("partition block belongs to a different universe");
    }
    if (block.empty()) throw InvalidInput("partition blocks must be nonempty");
  }

  // Canonical order: ascending by smallest member index.
  std::sort(blocks_.begin(), blocks_.end(), [](const Subset& a, const Subset& b) {
    return a.indices().front() < b.indices().front();
  });

  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t e : blocks_[b].indices()) {
      if (element_block_[e] != blocks_.size()) {
        throw InvalidInput("element '" + universe_->id_of(e) +
                           "' appears in more than one partition block");
      }
      element_block_[e] = b;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (element_block_[e] == blocks_.size()) {
      throw InvalidInput("partition does not cover element '" + universe_->id_of(e) + "'");
    }
  }
}

bool Partition::operator==(const Partition& other) const {
  return same_universe(universe_, other.universe_) && blocks_ == other.blocks_;
}

Partition partition_from_ids(UniversePtr universe,
                             const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Subset> subsets;
  subsets.reserve(blocks.size());
  for (const auto& ids : blocks) subsets.push_back(Subset::of_ids(universe, ids));
  return Partition(universe, std::move(subsets));
}

}  // namespace roughmat
