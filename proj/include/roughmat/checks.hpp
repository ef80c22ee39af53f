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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roughmat/oracle.hpp"

namespace roughmat {

/// Knobs for a verification campaign. Every campaign combines an exhaustive
/// sweep (all set partitions of all universes up to size 5, crossed with all
/// parameter sets) with `trials` seeded random instances of size up to
/// `size`; campaigns clamp the random size to what their budget affords.
struct CheckOptions {
  std::size_t size = 6;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::size_t cap = kDefaultEnumerationCap;
};

struct CheckOutcome {
  std::string name;
  bool ok = true;
  long long instances = 0;
  long long checks = 0;
  std::string violation;  // one-line description when !ok
  std::string witness;    // minimal reproducing instance, serialized
};

/// "axioms: ok (instances=1954, checks=1954)" or the violation line.
std::string render_outcome_line(const CheckOutcome& outcome);

// Individual campaigns. Each returns a deterministic outcome for fixed
// options.
CheckOutcome check_laws(const CheckOptions& opt);       // approximation operator laws
CheckOutcome check_axioms(const CheckOptions& opt);     // independence axioms of the family
CheckOutcome check_reps(const CheckOptions& opt);       // five representations agree
CheckOutcome check_theorem1(const CheckOptions& opt);   // direct-sum decomposition agrees
CheckOutcome check_rank(const CheckOptions& opt);       // closed-form rank vs brute force
CheckOutcome check_closure(const CheckOptions& opt);    // closed-form closure vs brute force
CheckOutcome check_circuits(const CheckOptions& opt);   // closed-form circuits vs brute force
CheckOutcome check_bases(const CheckOptions& opt);      // closed-form bases vs brute force
CheckOutcome check_lemmas(const CheckOptions& opt);     // restricted-approximation lemmas
CheckOutcome check_endpoints(const CheckOptions& opt);  // degenerate parameters

/// `what` is one of laws|axioms|reps|theorem1|rank|closure|circuits|bases|
/// lemmas|endpoints|all. "all" runs every campaign in that order.
std::vector<CheckOutcome> run_check(const std::string& what, const CheckOptions& opt);

/// A property evaluated on one instance; returns a violation description or
/// nullopt. Must be deterministic in the instance.
using InstanceProperty = std::function<std::optional<std::string>(const ParametricInstance&)>;

/// Greedily removes universe elements while the property keeps failing;
/// the result is 1-minimal (no single further removal preserves failure).
ParametricInstance shrink_instance(const InstanceProperty& property, ParametricInstance failing);

/// The instance with one element deleted from the universe; blocks and the
/// parameter are projected, empty blocks dropped. nullopt when the universe
/// would become empty.
std::optional<ParametricInstance> remove_element(const ParametricInstance& inst,
                                                 std::size_t index);

/// The exhaustive sweep: every set partition of every universe of size
/// 1..max_size crossed with every parameter subset.
std::vector<ParametricInstance> exhaustive_instances(std::size_t max_size);

/// `count` seeded random instances with universe sizes in [min_size, max_size],
/// cycling the block laws.
std::vector<ParametricInstance> random_instances(std::size_t count, std::size_t min_size,
                                                 std::size_t max_size, std::uint64_t seed);

}  // namespace roughmat
