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

#include <algorithm>
#include <set>

#include "roughmat/format.hpp"
#include "roughmat/ingest.hpp"
#include "roughmat/oracle.hpp"

using namespace roughmat;

namespace {

// Blocks as identifier sets, independent of universe element order.
std::set<std::set<std::string>> block_ids(const Partition& p) {
  std::set<std::set<std::string>> out;
  for (const Subset& block : p.blocks()) {
    const auto ids = block.ids();
    out.emplace(ids.begin(), ids.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("csv parsing handles quoting") {
  const auto rows = parse_csv("id,a,b\r\nr1,\"x,1\",\"he said \"\"hi\"\"\"\nr2, y ,z\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"id", "a", "b"});
  CHECK(rows[1] == std::vector<std::string>{"r1", "x,1", "he said \"hi\""});
  CHECK(rows[2] == std::vector<std::string>{"r2", "y", "z"});

  CHECK_THROWS_AS(parse_csv("a,\"unterminated\n"), InvalidInput);
}

TEST_CASE("table construction validates shape") {
  CHECK_THROWS_AS(InformationTable::from_csv("id,a\nr1,x\nr2\n"), InvalidInput);
  CHECK_THROWS_AS(InformationTable::from_csv("id,a\nr1,x\nr1,y\n"), InvalidInput);
  CHECK_THROWS_AS(InformationTable::from_csv(""), InvalidInput);

  const auto table = InformationTable::from_csv("id,a\nr1,x\n");
  CHECK_THROWS_AS(table.attribute_index("nope"), InvalidInput);
  CHECK_THROWS_AS(indiscernibility_partition(table, {}), InvalidInput);
  CHECK_THROWS_AS(indiscernibility_partition(table, {"nope"}), InvalidInput);
  CHECK_THROWS_AS(decision_target(table, "nope", "x"), InvalidInput);
}

TEST_CASE("single-attribute grouping") {
  const auto table = InformationTable::from_csv("id,a\nr1,x\nr2,x\nr3,y\n");
  CHECK(format_partition(indiscernibility_partition(table, {"a"})) == "{{r1,r2},{r3}}");
}

TEST_CASE("all attributes distinct rows give singletons") {
  const auto table = InformationTable::from_csv("id,a,b\nr1,x,1\nr2,y,1\nr3,x,2\n");
  CHECK(format_partition(indiscernibility_partition(table, {"a", "b"})) ==
        "{{r1},{r2},{r3}}");
}

TEST_CASE("joint grouping over two attributes") {
  const auto table = InformationTable::from_csv("id,a,b\nr1,x,1\nr2,x,2\nr3,x,1\n");
  CHECK(format_partition(indiscernibility_partition(table, {"a", "b"})) == "{{r1,r3},{r2}}");
  // One attribute alone is coarser.
  CHECK(format_partition(indiscernibility_partition(table, {"a"})) == "{{r1,r2,r3}}");
}

TEST_CASE("decision target") {
  const auto table = InformationTable::from_csv("id,d\nr1,yes\nr2,no\nr3,yes\n");
  CHECK(format_subset(decision_target(table, "d", "yes")) == "{r1,r3}");
  CHECK(decision_target(table, "d", "absent").empty());
  CHECK(decision_target(table, "d", "yes") !=
        Subset::full_set(table.object_universe()));
  const auto uniform = InformationTable::from_csv("id,d\nr1,y\nr2,y\n");
  CHECK(decision_target(uniform, "d", "y") == Subset::full_set(uniform.object_universe()));
}

TEST_CASE("refining the attribute set refines the partition") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::string csv = "id,a,b,c\n";
    for (int r = 0; r < 8; ++r) {
      csv += "r" + std::to_string(r + 1);
      for (int c = 0; c < 3; ++c) csv += "," + std::to_string(rng.next_below(2));
      csv += "\n";
    }
    const auto table = InformationTable::from_csv(csv);
    const Partition coarse = indiscernibility_partition(table, {"a"});
    const Partition fine = indiscernibility_partition(table, {"a", "b", "c"});
    for (const Subset& fine_block : fine.blocks()) {
      const std::size_t host = coarse.block_of(fine_block.indices().front());
      CHECK(fine_block.is_subset_of(coarse.blocks()[host]));
    }
  }
}

TEST_CASE("column and row order do not change the grouping") {
  const auto table = InformationTable::from_csv("id,a,b\nr1,x,1\nr2,y,2\nr3,x,1\n");
  const auto swapped_cols = InformationTable::from_csv("id,b,a\nr1,1,x\nr2,2,y\nr3,1,x\n");
  CHECK(block_ids(indiscernibility_partition(table, {"a", "b"})) ==
        block_ids(indiscernibility_partition(swapped_cols, {"b", "a"})));

  const auto swapped_rows = InformationTable::from_csv("id,a,b\nr3,x,1\nr1,x,1\nr2,y,2\n");
  CHECK(block_ids(indiscernibility_partition(table, {"a", "b"})) ==
        block_ids(indiscernibility_partition(swapped_rows, {"a", "b"})));
}

TEST_CASE("identifier column can be named") {
  const auto table = InformationTable::from_csv("a,obj,b\nx,r1,1\ny,r2,2\n", "obj");
  CHECK(table.objects() == std::vector<std::string>{"r1", "r2"});
  CHECK(table.attributes() == std::vector<std::string>{"a", "b"});
  CHECK(table.value(0, 0) == "x");
  CHECK(table.value(1, 1) == "2");
  CHECK_THROWS_AS(InformationTable::from_csv("a,b\nx,y\n", "missing"), InvalidInput);
}

}  // TEST_SUITE
