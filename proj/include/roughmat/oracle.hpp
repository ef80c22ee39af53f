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

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "roughmat/matroid.hpp"
#include "roughmat/parametric.hpp"

namespace roughmat {

/// splitmix64: the fixed pseudorandom generator used for every seeded
/// instance, so runs reproduce bit-for-bit across platforms and
/// implementations. State transition per draw:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, n); n must be positive. Plain modulo reduction: the
  /// bias is irrelevant here, determinism is what matters.
  std::uint64_t next_below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// Definition-level materialization of a matroid: every subset of the
/// ground set pushed through the independence oracle, with bases, circuits
/// and the rank table derived literally from the definitions. This is the
/// ground truth the closed forms are tested against.
struct BruteProfile {
  SetFamily family;    // all independent sets
  SetFamily bases;     // Max of the family
  SetFamily circuits;  // Min of the complement family
  /// rank keyed by subset mask over the ground element positions
  /// (bit j of the key names ground_positions[j]).
  std::vector<std::size_t> rank_by_mask;
  std::vector<std::size_t> ground_positions;
  std::size_t ground_size = 0;

  std::size_t rank_of(const Subset& x) const;
  Subset closure_of(const Subset& x) const;
};

/// Enumerates 2^|ground| subsets; refuses grounds above the cap.
BruteProfile brute_profile(const Matroid& m, std::size_t cap = kDefaultEnumerationCap);

/// Largest independent subset of y found by scanning the 2^|y| subsets of y
/// through the oracle. Independent of every closed-form rank path.
std::size_t brute_rank_within(const Matroid& m, const Subset& y,
                              std::size_t cap = kDefaultEnumerationCap);

enum class BlockLaw {
  uniform,  // block labels uniform over [0, n): moderate block sizes
  coarse,   // labels over [0, ceil(sqrt(n))): few, large blocks
  fine,     // labels over [0, 2n): many singletons
};

/// Recipe for a reproducible random instance. Identical specs produce
/// bit-identical instances: n label draws for the partition, then n
/// membership draws for X, in element order.
struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t universe_size = 1;
  BlockLaw block_law = BlockLaw::uniform;
  double x_density = 0.5;
};

ParametricInstance random_instance(const InstanceSpec& spec);

/// Calls fn once per set partition of {0..n-1}, encoded as a restricted
/// growth string: labels[0] = 0 and labels[i] <= max(labels[0..i-1]) + 1.
/// Visits every partition exactly once.
void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::size_t>&)>& fn);

/// The partition of the given universe named by a restricted growth string.
Partition partition_from_labels(const UniversePtr& universe,
                                const std::vector<std::size_t>& labels);

BlockLaw block_law_from_code(const std::string& code);  // uniform|coarse|fine
const char* to_code(BlockLaw law);

}  // namespace roughmat
