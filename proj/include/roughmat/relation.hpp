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

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "roughmat/core.hpp"
#include "roughmat/partition.hpp"

namespace roughmat {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// An explicit binary relation: a set of ordered element pairs over one
/// universe. Used for input, validation and the restriction operator;
/// equivalence relations are normally carried around as a Partition.
class BinaryRelation {
 public:
  explicit BinaryRelation(UniversePtr universe);
  BinaryRelation(UniversePtr universe, std::set<IndexPair> pairs);

  static BinaryRelation from_id_pairs(UniversePtr universe,
                                      const std::vector<std::pair<std::string, std::string>>& pairs);
  static BinaryRelation identity(UniversePtr universe);
  static BinaryRelation complete(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::set<IndexPair>& pairs() const { return pairs_; }
  bool contains(std::size_t a, std::size_t b) const { return pairs_.count({a, b}) > 0; }
  std::size_t size() const { return pairs_.size(); }

  bool operator==(const BinaryRelation& other) const;

 private:
  UniversePtr universe_;
  std::set<IndexPair> pairs_;
};

enum class EquivalenceProperty { reflexive, symmetric, transitive };

/// Outcome of an equivalence check. On failure, `violated` names the first
/// failing axiom in the fixed order reflexive, symmetric, transitive, and
/// `witness` is the missing pair that certifies it (for transitivity the
/// missing pair (x,z) with the mediating element recorded in `via`).
struct EquivalenceVerdict {
  bool holds = true;
  std::optional<EquivalenceProperty> violated;
  std::optional<IndexPair> witness;
  std::optional<std::size_t> via;
};

/// Fails when a relation required to be an equivalence is not; carries
/// the verdict for diagnostics.
class NotEquivalence : public std::invalid_argument {
 public:
  NotEquivalence(std::string message, EquivalenceVerdict verdict)
      : std::invalid_argument(std::move(message)), verdict(std::move(verdict)) {}
  EquivalenceVerdict verdict;
};

/// {(a,b) in r : a in x}. The result keeps the original universe.
BinaryRelation restrict_relation(const BinaryRelation& r, const Subset& x);

/// Reflexive, symmetric and transitive over the whole universe.
EquivalenceVerdict check_equivalence(const BinaryRelation& r);

/// Same three properties, quantified over `ground` only. A pair leaving the
/// ground fails symmetry, so this doubles as the "equivalence relation on X"
/// test for restricted relations.
EquivalenceVerdict check_equivalence_on(const BinaryRelation& r, const Subset& ground);

/// Equivalence classes of r, in canonical order. Throws NotEquivalence.
Partition partition_from_relation(const BinaryRelation& r);

/// Union of block x block over all blocks; left inverse of
/// partition_from_relation.
BinaryRelation relation_from_partition(const Partition& p);

const char* to_string(EquivalenceProperty p);

}  // namespace roughmat
