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

#include "roughmat/matroid.hpp"

#include <algorithm>
#include <bit>

namespace roughmat {

namespace {

// Positions of the ground elements, with the enumeration guards applied.
std::vector<std::size_t> enumerable_positions(const Subset& ground, std::size_t cap,
                                              const char* what) {
  auto positions = ground.indices();
  if (positions.size() > cap) {
    throw CapExceeded(std::string(what) + ": ground set of size " +
                      std::to_string(positions.size()) + " exceeds the enumeration cap of " +
                      std::to_string(cap));
  }
  if (positions.size() > 63) {
    throw CapExceeded(std::string(what) + ": enumeration is limited to 63 elements");
  }
  return positions;
}

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

void require_within_ground(const Matroid& m, const Subset& x, const char* what) {
  require_same_universe(m.ground(), x, what);
  if (!x.is_subset_of(m.ground())) {
    throw InvalidInput(std::string(what) + ": argument is not a subset of the ground set");
  }
}

}  // namespace

Matroid::Matroid(Subset ground, Oracle oracle, Provenance provenance, ClosedForms closed_forms)
    : ground_(std::move(ground)),
      oracle_(std::move(oracle)),
      provenance_(provenance),
      closed_(std::move(closed_forms)),
      cache_(std::make_shared<Cache>()) {}

bool Matroid::is_independent(const Subset& s) const {
  require_same_universe(ground_, s, "is_independent");
  if (!s.is_subset_of(ground_)) return false;
  return oracle_(s);
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

Matroid free_matroid(Subset ground) {
  const UniversePtr universe = ground.universe();
  Matroid::ClosedForms cf;
  cf.rank = [](const Subset& x) { return x.count(); };
  cf.closure = [](const Subset& x) { return x; };
  cf.circuits = [universe]() { return SetFamily(universe); };
  Subset g = ground;
  cf.bases = [universe, g](std::size_t) { return SetFamily::from_sets(universe, {g}); };
  return Matroid(std::move(ground), [](const Subset&) { return true; }, Provenance::free,
                 std::move(cf));
}

Matroid partition_circuit_matroid(std::vector<Subset> blocks, Subset ground) {
  const UniversePtr universe = ground.universe();
  Subset covered = Subset::empty_set(universe);
  for (const Subset& block : blocks) {
    require_same_universe(block, ground, "partition_circuit_matroid");
    if (block.empty()) throw InvalidInput("partition_circuit_matroid: empty block");
    if (covered.intersects(block)) {
      throw InvalidInput("partition_circuit_matroid: overlapping blocks");
    }
    covered = covered | block;
  }
  if (covered != ground) {
    throw InvalidInput("partition_circuit_matroid: blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
    return a.indices().front() < b.indices().front();
  });

  auto shared_blocks = std::make_shared<const std::vector<Subset>>(std::move(blocks));
  auto oracle = [shared_blocks](const Subset& s) {
    for (const Subset& block : *shared_blocks) {
      if (block.is_subset_of(s)) return false;
    }
    return true;
  };

  Matroid::ClosedForms cf;
  cf.rank = [shared_blocks](const Subset& x) {
    std::size_t contained = 0;
    for (const Subset& block : *shared_blocks) {
      if (block.is_subset_of(x)) ++contained;
    }
    return x.count() - contained;
  };
  cf.circuits = [universe, shared_blocks]() {
    return SetFamily::from_sets(universe, *shared_blocks);
  };
  Subset g = ground;
  cf.bases = [universe, shared_blocks, g](std::size_t output_cap) {
    // Base count is the product of the block sizes: each base drops exactly
    // one element from every block.
    std::size_t total = 1;
    for (const Subset& block : *shared_blocks) {
      const std::size_t size = block.count();
      if (total > output_cap / size) {
        throw CapExceeded("bases: output of " + std::to_string(total) + "*" +
                          std::to_string(size) + "... bases exceeds the cap of " +
                          std::to_string(output_cap));
      }
      total *= size;
    }
    std::vector<std::vector<std::size_t>> block_elems;
    for (const Subset& block : *shared_blocks) block_elems.push_back(block.indices());
    std::vector<std::size_t> drop(block_elems.size(), 0);
    std::vector<Subset> out;
    out.reserve(total);
    while (true) {
      Subset base = g;
      for (std::size_t b = 0; b < block_elems.size(); ++b) base.remove(block_elems[b][drop[b]]);
      out.push_back(std::move(base));
      std::size_t b = 0;
      while (b < drop.size() && ++drop[b] == block_elems[b].size()) drop[b++] = 0;
      if (b == drop.size()) break;
      if (drop.empty()) break;
    }
    return SetFamily::from_sets(universe, std::move(out));
  };

  return Matroid(std::move(ground), std::move(oracle), Provenance::partition_circuit,
                 std::move(cf));
}

Matroid partition_circuit_matroid(const Partition& p) {
  return partition_circuit_matroid(p.blocks(), Subset::full_set(p.universe()));
}

Matroid restriction(const Matroid& m, const Subset& x) {
  require_within_ground(m, x, "restriction");
  Matroid parent = m;
  auto oracle = [parent](const Subset& i) { return parent.is_independent(i); };
  return Matroid(x, std::move(oracle), Provenance::restriction);
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  require_same_universe(m1.ground(), m2.ground(), "direct_sum");
  if (m1.ground().intersects(m2.ground())) {
    throw InvalidInput("direct_sum: ground sets overlap");
  }
  Subset ground = m1.ground() | m2.ground();
  const UniversePtr universe = ground.universe();
  auto left = std::make_shared<const Matroid>(m1);
  auto right = std::make_shared<const Matroid>(m2);

  auto oracle = [left, right](const Subset& i) {
    return left->is_independent(i & left->ground()) &&
           right->is_independent(i & right->ground());
  };

  Matroid::ClosedForms cf;
  cf.rank = [left, right](const Subset& x) {
    return rank(*left, x & left->ground()) + rank(*right, x & right->ground());
  };
  cf.circuits = [universe, left, right]() {
    std::vector<Subset> all;
    for (const Subset& c : circuits(*left)) all.push_back(c);
    for (const Subset& c : circuits(*right)) all.push_back(c);
    return SetFamily::from_sets(universe, std::move(all));
  };
  cf.bases = [universe, left, right](std::size_t output_cap) {
    const SetFamily b1 = bases(*left, kDefaultEnumerationCap, output_cap);
    const SetFamily b2 = bases(*right, kDefaultEnumerationCap, output_cap);
    if (!b2.empty() && b1.size() > output_cap / b2.size()) {
      throw CapExceeded("bases: direct-sum output exceeds the cap of " +
                        std::to_string(output_cap));
    }
    std::vector<Subset> out;
    out.reserve(b1.size() * b2.size());
    for (const Subset& a : b1) {
      for (const Subset& b : b2) out.push_back(a | b);
    }
    return SetFamily::from_sets(universe, std::move(out));
  };

  return Matroid(std::move(ground), std::move(oracle), Provenance::direct_sum, std::move(cf));
}

Matroid matroid_from_family(SetFamily family) {
  Subset ground = Subset::full_set(family.universe());
  auto shared = std::make_shared<const SetFamily>(std::move(family));
  auto oracle = [shared](const Subset& s) { return shared->contains(s); };
  return Matroid(std::move(ground), std::move(oracle), Provenance::explicit_family);
}

// ---------------------------------------------------------------------------
// Characteristic queries
// ---------------------------------------------------------------------------

SetFamily enumerate_independent(const Matroid& m, std::size_t cap) {
  const auto positions = enumerable_positions(m.ground(), cap, "enumerate_independent");
  const UniversePtr& universe = m.universe();
  std::vector<Subset> members;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset s = subset_from_positions(universe, positions, mask);
    if (m.is_independent(s)) members.push_back(std::move(s));
  }
  return SetFamily::from_sets(universe, std::move(members));
}

SetFamily bases_brute(const Matroid& m, std::size_t cap) {
  const auto positions = enumerable_positions(m.ground(), cap, "bases");
  const UniversePtr& universe = m.universe();
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset s = subset_from_positions(universe, positions, mask);
    if (!m.is_independent(s)) continue;
    // Maximal iff no single addition stays independent (downward closure).
    bool maximal = true;
    for (std::size_t p : positions) {
      if (!s.contains(p) && m.is_independent(s.with(p))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(std::move(s));
  }
  return SetFamily::from_sets(universe, std::move(out));
}

SetFamily circuits_brute(const Matroid& m, std::size_t cap) {
  const auto positions = enumerable_positions(m.ground(), cap, "circuits");
  const UniversePtr& universe = m.universe();
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset s = subset_from_positions(universe, positions, mask);
    if (m.is_independent(s)) continue;
    // Minimal dependent iff every single deletion is independent.
    bool minimal = true;
    for (std::size_t p : s.indices()) {
      if (!m.is_independent(s.without(p))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(s));
  }
  return SetFamily::from_sets(universe, std::move(out));
}

std::size_t rank_brute(const Matroid& m, const Subset& x, std::size_t cap) {
  require_within_ground(m, x, "rank");
  const auto positions = enumerable_positions(x, cap, "rank");
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    if (m.is_independent(subset_from_positions(m.universe(), positions, mask))) best = size;
  }
  return best;
}

Subset closure_brute(const Matroid& m, const Subset& x, std::size_t cap) {
  require_within_ground(m, x, "closure");
  const std::size_t base_rank = rank_brute(m, x, cap);
  Subset out = x;
  for (std::size_t p : (m.ground() - x).indices()) {
    if (rank_brute(m, x.with(p), cap) == base_rank) out.add(p);
  }
  return out;
}

SetFamily bases(const Matroid& m, std::size_t cap, std::size_t output_cap) {
  auto& cache = *m.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.bases) return *cache.bases;
  }
  SetFamily result = m.closed_forms().bases ? m.closed_forms().bases(output_cap)
                                            : bases_brute(m, cap);
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (!cache.bases) cache.bases = result;
  return *cache.bases;
}

SetFamily circuits(const Matroid& m, std::size_t cap) {
  auto& cache = *m.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.circuits) return *cache.circuits;
  }
  SetFamily result = m.closed_forms().circuits ? m.closed_forms().circuits()
                                               : circuits_brute(m, cap);
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (!cache.circuits) cache.circuits = result;
  return *cache.circuits;
}

std::size_t rank(const Matroid& m, const Subset& x, std::size_t cap) {
  if (m.closed_forms().rank) {
    require_within_ground(m, x, "rank");
    return m.closed_forms().rank(x);
  }
  return rank_brute(m, x, cap);
}

Subset closure(const Matroid& m, const Subset& x, std::size_t cap) {
  require_within_ground(m, x, "closure");
  if (m.closed_forms().closure) return m.closed_forms().closure(x);
  if (m.closed_forms().rank) {
    const std::size_t base_rank = m.closed_forms().rank(x);
    Subset out = x;
    for (std::size_t p : (m.ground() - x).indices()) {
      if (m.closed_forms().rank(x.with(p)) == base_rank) out.add(p);
    }
    return out;
  }
  return closure_brute(m, x, cap);
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

namespace {

// Canonical-first proper subset of `member` missing from the family.
Subset first_missing_subset(const SetFamily& family, const Subset& member) {
  const auto positions = member.indices();
  std::vector<Subset> subsets;
  const std::uint64_t limit = std::uint64_t{1} << positions.size();
  for (std::uint64_t mask = 0; mask + 1 < limit; ++mask) {
    subsets.push_back(subset_from_positions(member.universe(), positions, mask));
  }
  std::sort(subsets.begin(), subsets.end(), canonical_less);
  for (const Subset& s : subsets) {
    if (!family.contains(s)) return s;
  }
  return member;  // unreachable when a subset is known to be missing
}

}  // namespace

AxiomVerdict check_independence_axioms(const SetFamily& family) {
  AxiomVerdict v;
  const Subset empty = Subset::empty_set(family.universe());

  if (!family.contains(empty)) {
    v.holds = false;
    v.violated = IndependenceAxiom::i1;
    v.witness_a = empty;
    return v;
  }

  for (const Subset& member : family) {
    for (std::size_t p : member.indices()) {
      if (!family.contains(member.without(p))) {
        v.holds = false;
        v.violated = IndependenceAxiom::i2;
        v.witness_a = member;
        v.witness_b = first_missing_subset(family, member);
        return v;
      }
    }
  }

  for (const Subset& small : family) {
    for (const Subset& large : family) {
      if (small.count() >= large.count()) continue;
      bool augmented = false;
      for (std::size_t p : (large - small).indices()) {
        if (family.contains(small.with(p))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        v.holds = false;
        v.violated = IndependenceAxiom::i3;
        v.witness_a = small;
        v.witness_b = large;
        return v;
      }
    }
  }
  return v;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::free: return "free";
    case Provenance::partition_circuit: return "partition-circuit";
    case Provenance::parametric: return "parametric";
    case Provenance::restriction: return "restriction";
    case Provenance::direct_sum: return "direct-sum";
    case Provenance::explicit_family: return "explicit-family";
  }
  return "?";
}

const char* to_string(IndependenceAxiom a) {
  switch (a) {
    case IndependenceAxiom::i1: return "I1";
    case IndependenceAxiom::i2: return "I2";
    case IndependenceAxiom::i3: return "I3";
  }
  return "?";
}

}  // namespace roughmat
