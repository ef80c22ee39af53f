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

#include <set>

#include "roughmat/format.hpp"
#include "roughmat/instance_io.hpp"
#include "roughmat/oracle.hpp"

using namespace roughmat;

TEST_SUITE("oracle") {

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 a(0);
  CHECK(a.next_u64() == 0xe220a8397b1dcdafULL);
  CHECK(a.next_u64() == 0x6e789e6aa1b965f4ULL);
  CHECK(a.next_u64() == 0x06c45d188009454fULL);

  SplitMix64 b(42);
  CHECK(b.next_u64() == 0xbdd732262feb6e95ULL);
  CHECK(b.next_u64() == 0x28efe333b266f103ULL);

  SplitMix64 c(7);
  for (int k = 0; k < 100; ++k) {
    CHECK(c.next_below(10) < 10);
    const double unit = c.next_unit();
    CHECK(unit >= 0.0);
    CHECK(unit < 1.0);
  }
}

TEST_CASE("brute profile of the worked example") {
  auto u = make_numbered_universe(3);
  const ParametricInstance inst(
      ApproximationSpace(partition_from_ids(u, {{"1", "2"}, {"3"}})),
      Subset::of_ids(u, {"1"}));
  const BruteProfile profile = brute_profile(parametric_matroid(inst));
  CHECK(format_family_inline(profile.family) == "{{},{1},{2}}");
  CHECK(format_family_inline(profile.bases) == "{{1},{2}}");
  CHECK(format_family_inline(profile.circuits) == "{{3},{1,2}}");
  CHECK(profile.rank_of(Subset::full_set(u)) == 1);
  CHECK(profile.rank_of(Subset::empty_set(u)) == 0);
}

TEST_CASE("brute profile of a free matroid") {
  auto u = make_numbered_universe(2);
  const BruteProfile profile = brute_profile(free_matroid(Subset::full_set(u)));
  CHECK(profile.family.size() == 4);
  CHECK(profile.circuits.empty());
  CHECK(format_family_inline(profile.bases) == "{{1,2}}");
}

TEST_CASE("brute profile of a one-block partition-circuit matroid") {
  auto u = make_numbered_universe(3);
  const BruteProfile profile =
      brute_profile(partition_circuit_matroid(partition_from_ids(u, {{"1", "2", "3"}})));
  CHECK(format_family_inline(profile.bases) == "{{1,2},{1,3},{2,3}}");
  CHECK(profile.rank_of(Subset::full_set(u)) == 2);
}

TEST_CASE("profile consistency with the definition-level extremal operators") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = random_instance({seed + 40, 6, BlockLaw::uniform, 0.5});
    const Matroid m = parametric_matroid(inst);
    const BruteProfile profile = brute_profile(m);
    CHECK(profile.bases == extremal_sets(profile.family, ExtremalMode::max));
    // All bases share one size; the rank table caps at that size.
    for (const Subset& base : profile.bases) {
      CHECK(base.count() == profile.rank_of(m.ground()));
    }
    for (const Subset& c : profile.circuits) {
      for (const Subset& other : profile.circuits) CHECK(!c.is_proper_subset_of(other));
    }
    // Spot-check the rank table against independent subset search.
    SplitMix64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      const Subset y = Subset::from_mask64(inst.universe(), rng.next_u64() & 0x3F);
      CHECK(profile.rank_of(y) == brute_rank_within(m, y));
      CHECK(profile.rank_of(y) == rank_brute(m, y));
    }
  }
}

TEST_CASE("brute profile respects the cap") {
  auto u = make_numbered_universe(8);
  CHECK_THROWS_AS(brute_profile(free_matroid(Subset::full_set(u)), 4), CapExceeded);
}

TEST_CASE("random instances are reproducible") {
  const InstanceSpec spec{123456789, 9, BlockLaw::uniform, 0.37};
  const auto a = random_instance(spec);
  const auto b = random_instance(spec);
  CHECK(serialize_instance(a) == serialize_instance(b));
  CHECK(instance_digest(a) == instance_digest(b));

  const auto zero = random_instance({5, 7, BlockLaw::uniform, 0.0});
  CHECK(zero.x().empty());
  const auto one = random_instance({5, 7, BlockLaw::uniform, 1.0});
  CHECK(one.x() == Subset::full_set(one.universe()));
}

TEST_CASE("block laws shape valid partitions") {
  for (BlockLaw law : {BlockLaw::uniform, BlockLaw::coarse, BlockLaw::fine}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = random_instance({seed, 10, law, 0.5});
      std::size_t total = 0;
      for (const Subset& block : inst.space().partition().blocks()) {
        CHECK(!block.empty());
        total += block.count();
      }
      CHECK(total == 10);
    }
  }
  CHECK_THROWS_AS(random_instance({1, 0, BlockLaw::uniform, 0.5}), InvalidInput);
}

TEST_CASE("set-partition enumeration hits every partition exactly once") {
  const std::size_t expected_counts[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= 7; ++n) {
    auto u = make_numbered_universe(n);
    std::set<std::string> seen;
    std::size_t count = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
      ++count;
      // Valid restricted growth string.
      CHECK(labels[0] == 0);
      std::size_t prefix_max = 0;
      for (std::size_t i = 1; i < labels.size(); ++i) {
        CHECK(labels[i] <= prefix_max + 1);
        prefix_max = std::max(prefix_max, labels[i]);
      }
      seen.insert(format_partition(partition_from_labels(u, labels)));
    });
    CHECK(count == expected_counts[n]);
    CHECK(seen.size() == count);
  }
}

}  // TEST_SUITE
