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

#include "roughmat/oracle.hpp"

#include <bit>
#include <cmath>

namespace roughmat {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) { return next_u64() % n; }

double SplitMix64::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

namespace {

Subset subset_from_positions(const UniversePtr& universe,
                             const std::vector<std::size_t>& positions, std::uint64_t mask) {
  Subset s = Subset::empty_set(universe);
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    s.add(positions[static_cast<std::size_t>(bit)]);
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t mask_of_positions(const std::vector<std::size_t>& positions, const Subset& x) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (x.contains(positions[j])) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

}  // namespace

BruteProfile brute_profile(const Matroid& m, std::size_t cap) {
  auto positions = m.ground().indices();
  if (positions.size() > cap) {
    throw CapExceeded("brute_profile: ground set of size " + std::to_string(positions.size()) +
                      " exceeds the enumeration cap of " + std::to_string(cap));
  }
  if (positions.size() > 30) {
    throw CapExceeded("brute_profile: refusing a 2^" + std::to_string(positions.size()) +
                      " rank table");
  }

  const UniversePtr& universe = m.universe();
  const std::uint64_t limit = std::uint64_t{1} << positions.size();

  std::vector<bool> independent(limit, false);
  std::vector<Subset> members;
  std::vector<Subset> dependents;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset s = subset_from_positions(universe, positions, mask);
    if (m.is_independent(s)) {
      independent[mask] = true;
      members.push_back(std::move(s));
    } else {
      dependents.push_back(std::move(s));
    }
  }

  BruteProfile profile{
      SetFamily::from_sets(universe, std::move(members)),
      SetFamily(universe),
      SetFamily(universe),
      {},
      positions,
      positions.size(),
  };
  profile.bases = extremal_sets(profile.family, ExtremalMode::max);
  profile.circuits =
      extremal_sets(SetFamily::from_sets(universe, std::move(dependents)), ExtremalMode::min);

  // rank(S) by definition: |S| when independent, else the best over the
  // one-element deletions (any maximum independent subset survives in one).
  profile.rank_by_mask.assign(limit, 0);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (independent[mask]) {
      profile.rank_by_mask[mask] = static_cast<std::size_t>(std::popcount(mask));
      continue;
    }
    std::size_t best = 0;
    std::uint64_t bits = mask;
    while (bits != 0) {
      const std::uint64_t lowest = bits & (~bits + 1);
      best = std::max(best, profile.rank_by_mask[mask ^ lowest]);
      bits ^= lowest;
    }
    profile.rank_by_mask[mask] = best;
  }
  return profile;
}

std::size_t BruteProfile::rank_of(const Subset& x) const {
  return rank_by_mask.at(mask_of_positions(ground_positions, x));
}

Subset BruteProfile::closure_of(const Subset& x) const {
  const std::uint64_t mask = mask_of_positions(ground_positions, x);
  const std::size_t base_rank = rank_by_mask.at(mask);
  Subset out = x;
  for (std::size_t j = 0; j < ground_positions.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if ((mask & bit) == 0 && rank_by_mask.at(mask | bit) == base_rank) {
      out.add(ground_positions[j]);
    }
  }
  return out;
}

std::size_t brute_rank_within(const Matroid& m, const Subset& y, std::size_t cap) {
  auto positions = y.indices();
  if (positions.size() > cap) {
    throw CapExceeded("brute_rank_within: subset of size " + std::to_string(positions.size()) +
                      " exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    if (m.is_independent(subset_from_positions(m.universe(), positions, mask))) best = size;
  }
  return best;
}

ParametricInstance random_instance(const InstanceSpec& spec) {
  if (spec.universe_size < 1) {
    throw InvalidInput("random_instance: universe_size must be at least 1");
  }
  const std::size_t n = spec.universe_size;
  UniversePtr universe = make_numbered_universe(n);
  SplitMix64 rng(spec.seed);

  std::uint64_t label_range = 0;
  switch (spec.block_law) {
    case BlockLaw::uniform: label_range = n; break;
    case BlockLaw::coarse:
      label_range = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      break;
    case BlockLaw::fine: label_range = 2 * n; break;
  }
  if (label_range == 0) label_range = 1;

  std::vector<std::vector<std::size_t>> groups(label_range);
  for (std::size_t i = 0; i < n; ++i) {
    groups[rng.next_below(label_range)].push_back(i);
  }
  std::vector<Subset> blocks;
  for (const auto& group : groups) {
    if (!group.empty()) blocks.push_back(Subset::of_indices(universe, group));
  }

  Subset x = Subset::empty_set(universe);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.next_unit() < spec.x_density) x.add(i);
  }

  return ParametricInstance(ApproximationSpace(Partition(universe, std::move(blocks))),
                            std::move(x));
}

void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (n == 0) return;
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);

  std::size_t i = 0;
  while (true) {
    if (i == n) {
      fn(labels);
      // Backtrack to the rightmost position that can still grow.
      do {
        --i;
      } while (i > 0 && labels[i] == prefix_max[i - 1] + 1);
      if (i == 0) return;
      ++labels[i];
      prefix_max[i] = std::max(labels[i], prefix_max[i - 1]);
      ++i;
      continue;
    }
    labels[i] = 0;
    prefix_max[i] = (i == 0) ? 0 : prefix_max[i - 1];
    ++i;
  }
}

Partition partition_from_labels(const UniversePtr& universe,
                                const std::vector<std::size_t>& labels) {
  if (labels.size() != universe->size()) {
    throw InvalidInput("partition_from_labels: label count differs from the universe size");
  }
  std::size_t max_label = 0;
  for (std::size_t l : labels) max_label = std::max(max_label, l);
  std::vector<std::vector<std::size_t>> groups(max_label + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
  std::vector<Subset> blocks;
  for (const auto& group : groups) {
    if (!group.empty()) blocks.push_back(Subset::of_indices(universe, group));
  }
  return Partition(universe, std::move(blocks));
}

BlockLaw block_law_from_code(const std::string& code) {
  if (code == "uniform") return BlockLaw::uniform;
  if (code == "coarse") return BlockLaw::coarse;
  if (code == "fine") return BlockLaw::fine;
  throw InvalidInput("unknown block law '" + code + "' (expected uniform|coarse|fine)");
}

const char* to_code(BlockLaw law) {
  switch (law) {
    case BlockLaw::uniform: return "uniform";
    case BlockLaw::coarse: return "coarse";
    case BlockLaw::fine: return "fine";
  }
  return "?";
}

}  // namespace roughmat
