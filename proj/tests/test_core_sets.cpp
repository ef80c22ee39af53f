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

#include <doctest.h>

#include "roughmat/format.hpp"
#include "roughmat/oracle.hpp"
#include "roughmat/relation.hpp"

using namespace roughmat;

namespace {

BinaryRelation worked_example_relation(const UniversePtr& u5) {
  return BinaryRelation::from_id_pairs(
      u5, {{"1", "2"}, {"1", "3"}, {"1", "5"}, {"2", "3"},
           {"3", "1"}, {"3", "3"}, {"4", "5"}, {"5", "2"}});
}

BinaryRelation two_block_relation(const UniversePtr& u3) {
  return BinaryRelation::from_id_pairs(
      u3, {{"1", "1"}, {"1", "2"}, {"2", "1"}, {"2", "2"}, {"3", "3"}});
}

}  // namespace

TEST_SUITE("core_sets") {

TEST_CASE("universe construction validates identifiers") {
  CHECK_THROWS_AS(make_universe({}), InvalidInput);
  CHECK_THROWS_AS(make_universe({"a", "a"}), InvalidInput);
  auto u = make_universe({"a", "b"});
  CHECK(u->size() == 2);
  CHECK(u->index_of("b") == 1);
  CHECK(!u->index_of("c"));
  CHECK_THROWS_AS(Subset::of_ids(u, {"zzz"}), InvalidInput);
}

TEST_CASE("subset algebra") {
  auto u = make_numbered_universe(6);
  const Subset a = Subset::of_ids(u, {"1", "3", "5"});
  const Subset b = Subset::of_ids(u, {"3", "5", "6"});
  CHECK((a | b) == Subset::of_ids(u, {"1", "3", "5", "6"}));
  CHECK((a & b) == Subset::of_ids(u, {"3", "5"}));
  CHECK((a - b) == Subset::of_ids(u, {"1"}));
  CHECK(a.complement() == Subset::of_ids(u, {"2", "4", "6"}));
  CHECK(a.count() == 3);
  CHECK((a & b).is_proper_subset_of(a));
  CHECK(!a.is_subset_of(b));
  CHECK(a.intersects(b));

  auto other = make_numbered_universe(3);
  CHECK_THROWS_AS((void)(a | Subset::empty_set(other)), UniverseMismatch);
}

TEST_CASE("canonical family order is cardinality then index order") {
  auto u = make_numbered_universe(3);
  const auto fam = SetFamily::from_sets(
      u, {Subset::of_ids(u, {"1", "2"}), Subset::of_ids(u, {"2"}), Subset::empty_set(u),
          Subset::of_ids(u, {"1"}), Subset::of_ids(u, {"1"})});
  CHECK(fam.size() == 4);  // duplicate dropped
  CHECK(format_family_inline(fam) == "{{},{1},{2},{1,2}}");
  CHECK(fam.contains(Subset::of_ids(u, {"2"})));
  CHECK(!fam.contains(Subset::of_ids(u, {"3"})));
}

TEST_CASE("relation restriction matches the worked example") {
  auto u5 = make_numbered_universe(5);
  const BinaryRelation r = worked_example_relation(u5);

  const BinaryRelation restricted = restrict_relation(r, Subset::of_ids(u5, {"3", "5"}));
  CHECK(format_relation(restricted) == "{(3,1),(3,3),(5,2)}");

  CHECK(restrict_relation(r, Subset::empty_set(u5)).pairs().empty());
  CHECK(restrict_relation(r, Subset::full_set(u5)) == r);

  // Restriction never invents pairs.
  SplitMix64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const Subset x = Subset::from_mask64(u5, rng.next_u64() & 0x1F);
    const BinaryRelation narrowed = restrict_relation(r, x);
    for (const auto& pair : narrowed.pairs()) {
      CHECK(r.pairs().count(pair) == 1);
    }
  }
}

TEST_CASE("equivalence check reports the first violated property") {
  auto u3 = make_numbered_universe(3);
  CHECK(check_equivalence(two_block_relation(u3)).holds);
  CHECK(check_equivalence(BinaryRelation::identity(u3)).holds);

  auto u2 = make_numbered_universe(2);
  const auto reflexive_fail =
      check_equivalence(BinaryRelation::from_id_pairs(u2, {{"1", "2"}}));
  CHECK(!reflexive_fail.holds);
  CHECK(reflexive_fail.violated == EquivalenceProperty::reflexive);
  CHECK(reflexive_fail.witness == IndexPair{0, 0});

  const auto symmetric_fail = check_equivalence(
      BinaryRelation::from_id_pairs(u2, {{"1", "1"}, {"2", "2"}, {"1", "2"}}));
  CHECK(symmetric_fail.violated == EquivalenceProperty::symmetric);
  CHECK(symmetric_fail.witness == IndexPair{1, 0});

  const auto transitive_fail = check_equivalence(BinaryRelation::from_id_pairs(
      u3, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "1"}, {"2", "3"}, {"3", "2"}}));
  CHECK(transitive_fail.violated == EquivalenceProperty::transitive);
  CHECK(transitive_fail.witness == IndexPair{0, 2});
}

TEST_CASE("partition from relation and back") {
  auto u3 = make_numbered_universe(3);
  const Partition p = partition_from_relation(two_block_relation(u3));
  CHECK(format_partition(p) == "{{1,2},{3}}");

  auto uab = make_universe({"a", "b"});
  CHECK(format_partition(partition_from_relation(BinaryRelation::identity(uab))) ==
        "{{a},{b}}");
  CHECK(format_partition(partition_from_relation(BinaryRelation::complete(u3))) ==
        "{{1,2,3}}");

  CHECK(relation_from_partition(p) == two_block_relation(u3));
  CHECK(relation_from_partition(partition_from_relation(BinaryRelation::identity(u3))) ==
        BinaryRelation::identity(u3));
  CHECK(relation_from_partition(Partition(u3, {Subset::full_set(u3)})) ==
        BinaryRelation::complete(u3));

  CHECK_THROWS_AS(partition_from_relation(BinaryRelation::from_id_pairs(u3, {{"1", "2"}})),
                  NotEquivalence);
}

TEST_CASE("partition round trip is the identity, exhaustive to size 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto u = make_numbered_universe(n);
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
      const Partition p = partition_from_labels(u, labels);
      CHECK(partition_from_relation(relation_from_partition(p)) == p);
    });
  }
  // Randomized above desk size.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance({seed, 12, BlockLaw::uniform, 0.5});
    const Partition& p = inst.space().partition();
    CHECK(partition_from_relation(relation_from_partition(p)) == p);
  }
}

TEST_CASE("partition invariants and validation") {
  auto u = make_numbered_universe(4);
  const Partition p(u, {Subset::of_ids(u, {"3"}), Subset::of_ids(u, {"1", "4"}),
                        Subset::of_ids(u, {"2"})});
  // Canonical order: ascending smallest member.
  CHECK(format_partition(p) == "{{1,4},{2},{3}}");
  std::size_t total = 0;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    total += p.blocks()[b].count();
    for (std::size_t c = b + 1; c < p.blocks().size(); ++c) {
      CHECK(!p.blocks()[b].intersects(p.blocks()[c]));
    }
  }
  CHECK(total == u->size());
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(1) == 1);

  CHECK_THROWS_AS(Partition(u, {Subset::of_ids(u, {"1"}), Subset::of_ids(u, {"1", "2"}),
                                Subset::of_ids(u, {"3", "4"})}),
                  InvalidInput);
  CHECK_THROWS_AS(Partition(u, {Subset::of_ids(u, {"1", "2"})}), InvalidInput);
  CHECK_THROWS_AS(Partition(u, {Subset::full_set(u), Subset::empty_set(u)}), InvalidInput);
}

TEST_CASE("extremal sets") {
  auto u = make_numbered_universe(3);
  const auto family = SetFamily::from_sets(
      u, {Subset::empty_set(u), Subset::of_ids(u, {"1"}), Subset::of_ids(u, {"2"})});
  CHECK(format_family_inline(extremal_sets(family, ExtremalMode::max)) == "{{1},{2}}");

  const auto singleton = SetFamily::from_sets(u, {Subset::of_ids(u, {"1", "3"})});
  CHECK(extremal_sets(singleton, ExtremalMode::max) == singleton);
  CHECK(extremal_sets(singleton, ExtremalMode::min) == singleton);

  const auto chain = SetFamily::from_sets(
      u, {Subset::empty_set(u), Subset::of_ids(u, {"1"}), Subset::of_ids(u, {"1", "2"})});
  CHECK(format_family_inline(extremal_sets(chain, ExtremalMode::min)) == "{{}}");

  CHECK(extremal_sets(SetFamily(u), ExtremalMode::max).empty());

  // Max and Min are antichains for arbitrary families.
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Subset> sets;
    for (int k = 0; k < 12; ++k) sets.push_back(Subset::from_mask64(u, rng.next_u64() & 0x7));
    const auto f = SetFamily::from_sets(u, std::move(sets));
    for (ExtremalMode mode : {ExtremalMode::max, ExtremalMode::min}) {
      const auto extremal = extremal_sets(f, mode);
      for (const Subset& a : extremal) {
        for (const Subset& b : extremal) {
          CHECK(!a.is_proper_subset_of(b));
        }
      }
    }
  }
}

}  // TEST_SUITE
