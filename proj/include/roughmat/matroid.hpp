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
#include <memory>
#include <mutex>
#include <optional>

#include "roughmat/core.hpp"
#include "roughmat/partition.hpp"

namespace roughmat {

/// Whole-family materialization refuses ground sets above this size unless
/// the caller raises the cap. Closed-form queries are never capped.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// bases() of constructions whose base count is a product of block sizes
/// refuses outputs larger than this.
inline constexpr std::size_t kDefaultBaseOutputCap = 1'000'000;

enum class Provenance {
  free,
  partition_circuit,
  parametric,
  restriction,
  direct_sum,
  explicit_family,
};

/// A matroid as ground set plus independence oracle. Constructions attach
/// closed-form characteristic queries where one exists; everything else is
/// answered by capped enumeration. Immutable after construction; the
/// bases/circuits cache is shared between copies and filled idempotently.
class Matroid {
 public:
  using Oracle = std::function<bool(const Subset&)>;

  struct ClosedForms {
    std::function<std::size_t(const Subset&)> rank;
    std::function<SetFamily()> circuits;
    std::function<SetFamily(std::size_t output_cap)> bases;
    std::function<Subset(const Subset&)> closure;
  };

  Matroid(Subset ground, Oracle oracle, Provenance provenance,
          ClosedForms closed_forms = {});

  const Subset& ground() const { return ground_; }
  const UniversePtr& universe() const { return ground_.universe(); }
  Provenance provenance() const { return provenance_; }

  /// Total over subsets of the universe: false outside the ground set,
  /// otherwise the oracle's answer.
  bool is_independent(const Subset& s) const;

  const ClosedForms& closed_forms() const { return closed_; }

  struct Cache {
    std::mutex mutex;
    std::optional<SetFamily> bases;
    std::optional<SetFamily> circuits;
  };
  const std::shared_ptr<Cache>& cache() const { return cache_; }

 private:
  Subset ground_;
  Oracle oracle_;
  Provenance provenance_;
  ClosedForms closed_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Every subset of the ground set is independent. An empty ground set gives
/// the matroid with a single independent set, the empty set.
Matroid free_matroid(Subset ground);

/// The matroid whose circuits are exactly the blocks of the partition;
/// a set is independent iff its lower approximation is empty, i.e. it
/// contains no whole block.
Matroid partition_circuit_matroid(const Partition& p);

/// Same construction on a sub-ground-set: `blocks` must partition `ground`.
Matroid partition_circuit_matroid(std::vector<Subset> blocks, Subset ground);

/// Ground x, independence inherited from m. No closed forms are carried
/// over; every query goes through the (restricted) oracle.
Matroid restriction(const Matroid& m, const Subset& x);

/// Ground sets must be disjoint; independence is componentwise.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

/// Independence is membership in the (explicitly given) family. The family
/// is not required to satisfy the axioms; check_independence_axioms decides.
Matroid matroid_from_family(SetFamily family);

// ---------------------------------------------------------------------------
// Characteristic queries
// ---------------------------------------------------------------------------

/// All independent subsets of the ground set. Refuses |ground| > cap.
SetFamily enumerate_independent(const Matroid& m, std::size_t cap = kDefaultEnumerationCap);

/// Maximal independent sets. Closed-form when the construction provides
/// one (output capped), otherwise enumeration capped by `cap`.
SetFamily bases(const Matroid& m, std::size_t cap = kDefaultEnumerationCap,
                std::size_t output_cap = kDefaultBaseOutputCap);

/// Minimal dependent sets.
SetFamily circuits(const Matroid& m, std::size_t cap = kDefaultEnumerationCap);

/// Size of a largest independent subset of x.
std::size_t rank(const Matroid& m, const Subset& x, std::size_t cap = kDefaultEnumerationCap);

/// Elements whose addition to x leaves the rank unchanged.
Subset closure(const Matroid& m, const Subset& x, std::size_t cap = kDefaultEnumerationCap);

// Enumeration-only twins, ignoring any closed form. These are the slow
// reference paths; tests compare the two routes.
SetFamily bases_brute(const Matroid& m, std::size_t cap = kDefaultEnumerationCap);
SetFamily circuits_brute(const Matroid& m, std::size_t cap = kDefaultEnumerationCap);
std::size_t rank_brute(const Matroid& m, const Subset& x, std::size_t cap = kDefaultEnumerationCap);
Subset closure_brute(const Matroid& m, const Subset& x, std::size_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

enum class IndependenceAxiom { i1, i2, i3 };

/// On failure, `violated` names the first failing axiom in the order
/// I1, I2, I3. For I2 the witnesses are (member, missing subset); for I3
/// the pair (smaller, larger) admitting no augmentation. Re-evaluating the
/// axiom on the witnesses reproduces the failure.
struct AxiomVerdict {
  bool holds = true;
  std::optional<IndependenceAxiom> violated;
  std::optional<Subset> witness_a;
  std::optional<Subset> witness_b;
};

/// Verifies (I1) empty set present, (I2) downward closure, (I3) augmentation
/// for every unequal-size pair. Desk-scale only: O(|f|^2 * |U|) for I3.
AxiomVerdict check_independence_axioms(const SetFamily& family);

const char* to_string(Provenance p);
const char* to_string(IndependenceAxiom a);

}  // namespace roughmat
