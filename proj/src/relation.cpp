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

#include "roughmat/relation.hpp"

#include <algorithm>
#include <map>

namespace roughmat {

BinaryRelation::BinaryRelation(UniversePtr universe) : universe_(std::move(universe)) {}

BinaryRelation::BinaryRelation(UniversePtr universe, std::set<IndexPair> pairs)
    : universe_(std::move(universe)), pairs_(std::move(pairs)) {
  const std::size_t n = universe_->size();
  for (const auto& [a, b] : pairs_) {
    if (a >= n || b >= n) {
      throw InvalidInput("relation pair component outside the universe");
    }
  }
}

BinaryRelation BinaryRelation::from_id_pairs(
    UniversePtr universe, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::set<IndexPair> idx;
  for (const auto& [a, b] : pairs) {
    auto ia = universe->index_of(a);
    auto ib = universe->index_of(b);
    if (!ia || !ib) {
      throw InvalidInput("relation pair (" + a + "," + b + ") mentions an unknown identifier");
    }
    idx.emplace(*ia, *ib);
  }
  return BinaryRelation(std::move(universe), std::move(idx));
}

BinaryRelation BinaryRelation::identity(UniversePtr universe) {
  std::set<IndexPair> idx;
  for (std::size_t i = 0; i < universe->size(); ++i) idx.emplace(i, i);
  return BinaryRelation(std::move(universe), std::move(idx));
}

BinaryRelation BinaryRelation::complete(UniversePtr universe) {
  std::set<IndexPair> idx;
  for (std::size_t i = 0; i < universe->size(); ++i) {
    for (std::size_t j = 0; j < universe->size(); ++j) idx.emplace(i, j);
  }
  return BinaryRelation(std::move(universe), std::move(idx));
}

bool BinaryRelation::operator==(const BinaryRelation& other) const {
  return same_universe(universe_, other.universe_) && pairs_ == other.pairs_;
}

BinaryRelation restrict_relation(const BinaryRelation& r, const Subset& x) {
  if (!same_universe(r.universe(), x.universe())) {
    throw UniverseMismatch("restrict_relation: relation and subset universes differ");
  }
  std::set<IndexPair> kept;
  for (const auto& p : r.pairs()) {
    if (x.contains(p.first)) kept.insert(p);
  }
  return BinaryRelation(r.universe(), std::move(kept));
}

EquivalenceVerdict check_equivalence_on(const BinaryRelation& r, const Subset& ground) {
  if (!same_universe(r.universe(), ground.universe())) {
    throw UniverseMismatch("check_equivalence_on: relation and ground universes differ");
  }
  EquivalenceVerdict v;

  for (std::size_t i : ground.indices()) {
    if (!r.contains(i, i)) {
      v.holds = false;
      v.violated = EquivalenceProperty::reflexive;
      v.witness = IndexPair{i, i};
      return v;
    }
  }
  for (const auto& [a, b] : r.pairs()) {
    if (!r.contains(b, a)) {
      v.holds = false;
      v.violated = EquivalenceProperty::symmetric;
      v.witness = IndexPair{b, a};
      return v;
    }
  }
  for (const auto& [a, b] : r.pairs()) {
    for (const auto& [b2, c] : r.pairs()) {
      if (b2 != b) continue;
      if (!r.contains(a, c)) {
        v.holds = false;
        v.violated = EquivalenceProperty::transitive;
        v.witness = IndexPair{a, c};
        v.via = b;
        return v;
      }
    }
  }
  return v;
}

EquivalenceVerdict check_equivalence(const BinaryRelation& r) {
  return check_equivalence_on(r, Subset::full_set(r.universe()));
}

Partition partition_from_relation(const BinaryRelation& r) {
  EquivalenceVerdict verdict = check_equivalence(r);
  if (!verdict.holds) {
    const auto& u = *r.universe();
    std::string msg = "relation is not an equivalence: ";
    msg += to_string(*verdict.violated);
    msg += " fails, missing pair (" + u.id_of(verdict.witness->first) + "," +
           u.id_of(verdict.witness->second) + ")";
    throw NotEquivalence(std::move(msg), std::move(verdict));
  }

  const std::size_t n = r.universe()->size();
  std::vector<Subset> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    Subset cls = Subset::empty_set(r.universe());
    for (std::size_t y = 0; y < n; ++y) {
      if (r.contains(x, y)) {
        cls.add(y);
        seen[y] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return Partition(r.universe(), std::move(classes));
}

BinaryRelation relation_from_partition(const Partition& p) {
  std::set<IndexPair> pairs;
  for (const Subset& block : p.blocks()) {
    const auto elems = block.indices();
    for (std::size_t a : elems) {
      for (std::size_t b : elems) pairs.emplace(a, b);
    }
  }
  return BinaryRelation(p.universe(), std::move(pairs));
}

const char* to_string(EquivalenceProperty p) {
  switch (p) {
    case EquivalenceProperty::reflexive: return "reflexive";
    case EquivalenceProperty::symmetric: return "symmetric";
    case EquivalenceProperty::transitive: return "transitive";
  }
  return "?";
}

}  // namespace roughmat
