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

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "roughmat/checks.hpp"
#include "roughmat/cli.hpp"
#include "roughmat/instance_io.hpp"

using namespace roughmat;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("roughmat_unit_" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  return path.string();
}

const char* kWorkedExampleJson =
    R"({"universe": ["1", "2", "3"], "blocks": [["1", "2"], ["3"]], "x": ["1"]})";

std::string worked_example_path() {
  static const std::string path = write_temp("ex2.json", kWorkedExampleJson);
  return path;
}

std::string five_element_path() {
  static const std::string path = write_temp(
      "five.json",
      R"({"universe": ["1","2","3","4","5"], "blocks": [["1","2"],["3","4"],["5"]], "x": ["1","2","5"]})");
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("instance parsing accepts both document forms") {
  const ParametricInstance a = parse_instance_document(kWorkedExampleJson);
  const ParametricInstance b = parse_instance_document(
      "# hand-written form\nuniverse: 1 2 3\nblocks: 1 2 | 3\nx: 1\n");
  CHECK(serialize_instance(a) == serialize_instance(b));
  CHECK(instance_digest(a) == instance_digest(b));

  // Round trip through the canonical serialization.
  const ParametricInstance again = parse_instance_document(serialize_instance(a));
  CHECK(serialize_instance(again) == serialize_instance(a));
}

TEST_CASE("instance parsing reports the offending field") {
  CHECK_THROWS_WITH_AS(parse_instance_document(
                           R"({"universe": ["1","2"], "blocks": [["1"],["1","2"]], "x": []})"),
                       "invalid partition: element '1' duplicated at blocks[1]", InvalidInput);
  CHECK_THROWS_WITH_AS(parse_instance_document(
                           R"({"universe": ["1","2"], "blocks": [["1"]], "x": []})"),
                       "invalid partition: element '2' not covered by blocks", InvalidInput);
  CHECK_THROWS_WITH_AS(parse_instance_document(
                           R"({"universe": ["1","2","3"], "blocks": [["1","2"],["3"]], "x": ["9"]})"),
                       "x[0]: element '9' is not a subset of the universe", InvalidInput);
  CHECK_THROWS_AS(parse_instance_document(
                      R"({"universe": ["1"], "blocks": [["1"]], "x": [], "extra": 1})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_instance_document("{not json"), InvalidInput);
  CHECK_THROWS_AS(parse_instance_document("universe: 1\nblocks: 1\nbogus: 2\nx:\n"),
                  InvalidInput);
}

TEST_CASE("approximation queries") {
  const std::string input = worked_example_path();
  auto run = [&](std::vector<std::string> argv) { return execute_command(argv); };

  CHECK(run({"approx", "lower", "--input", input, "--set", "1,3"}).output == "{3}\n");
  CHECK(run({"approx", "lower", "--input", input, "--set", ""}).output == "{}\n");
  CHECK(run({"approx", "upper", "--input", input, "--set", "1"}).output == "{1,2}\n");
  CHECK(run({"approx", "fnum", "--input", input, "--set", "1,2,3"}).output == "2\n");

  const auto missing = run({"approx", "lower", "--input", input, "--set", "7"});
  CHECK(missing.exit_code == kExitInput);
  CHECK(missing.diagnostics.find("unknown element") != std::string::npos);
}

TEST_CASE("matroid queries with both strategies") {
  const std::string input = worked_example_path();
  auto out = [&](std::vector<std::string> argv) {
    const auto result = execute_command(argv);
    REQUIRE(result.exit_code == kExitOk);
    return result.output;
  };

  CHECK(out({"matroid", "independents", "--input", input}) == "{}\n{1}\n{2}\n");
  for (const char* rep : {"lx", "llx", "diff", "blocks", "fnum"}) {
    CHECK(out({"matroid", "independents", "--input", input, "--rep", rep}) ==
          "{}\n{1}\n{2}\n");
  }
  CHECK(out({"matroid", "bases", "--input", input}) == "{1}\n{2}\n");
  CHECK(out({"matroid", "bases", "--input", input, "--brute"}) == "{1}\n{2}\n");
  CHECK(out({"matroid", "circuits", "--input", input}) == "{3}\n{1,2}\n");
  CHECK(out({"matroid", "circuits", "--input", input, "--brute"}) == "{3}\n{1,2}\n");
  CHECK(out({"matroid", "rank", "--input", input, "--set", "1,2,3"}) == "1\n");
  CHECK(out({"matroid", "rank", "--input", input, "--set", "1,2,3", "--brute"}) == "1\n");
  CHECK(out({"matroid", "closure", "--input", input, "--set", ""}) == "{3}\n");
  CHECK(out({"matroid", "closure", "--input", input, "--set", "", "--brute"}) == "{3}\n");
}

TEST_CASE("decompose output") {
  const auto result = execute_command({"decompose", "--input", five_element_path()});
  CHECK(result.exit_code == kExitOk);
  CHECK(result.output ==
        "lower: {1,2,5}\n"
        "partition-circuit component: ground={3,4} circuits={{3,4}}\n"
        "free component: ground={1,2,5}\n");
}

TEST_CASE("exit codes") {
  CHECK(execute_command({"nonsense"}).exit_code == kExitUsage);
  CHECK(execute_command({"approx", "lower"}).exit_code == kExitUsage);
  CHECK(execute_command({}).exit_code == kExitUsage);
  CHECK(execute_command({"--help"}).exit_code == kExitOk);

  const std::string bad = write_temp("bad.json", R"({"universe": ["1"]})");
  CHECK(execute_command({"approx", "lower", "--input", bad, "--set", ""}).exit_code ==
        kExitInput);
  CHECK(execute_command({"approx", "lower", "--input", "/no/such/file", "--set", ""})
            .exit_code == kExitInput);

  const auto capped =
      execute_command({"matroid", "independents", "--input", five_element_path(), "--cap", "3"});
  CHECK(capped.exit_code == kExitCap);
}

TEST_CASE("machine format is stable structured output") {
  const std::string input = worked_example_path();
  const auto first =
      execute_command({"matroid", "bases", "--input", input, "--format", "machine"});
  const auto second =
      execute_command({"matroid", "bases", "--input", input, "--format", "machine"});
  CHECK(first.exit_code == kExitOk);
  CHECK(first.output == second.output);

  const auto doc = nlohmann::ordered_json::parse(first.output);
  CHECK(doc["query"] == "matroid bases");
  CHECK(doc["instance_digest"].get<std::string>().size() == 16);
  CHECK(doc["result"] == nlohmann::ordered_json::parse(R"([["1"],["2"]])"));
}

TEST_CASE("generate and ingest round trips") {
  const auto generated = execute_command({"generate", "--size", "6", "--seed", "11"});
  CHECK(generated.exit_code == kExitOk);
  const ParametricInstance inst = parse_instance_document(generated.output);
  CHECK(serialize_instance(inst) == generated.output);
  CHECK(execute_command({"generate", "--size", "6", "--seed", "11"}).output ==
        generated.output);

  const std::string csv = write_temp("table.csv", "id,color,size,d\nr1,red,s,yes\nr2,red,s,no\nr3,blue,s,yes\n");
  const auto ingested = execute_command({"ingest", "--csv", csv, "--attrs", "color,size",
                                         "--decision", "d", "--value", "yes"});
  CHECK(ingested.exit_code == kExitOk);
  const ParametricInstance table_inst = parse_instance_document(ingested.output);
  CHECK(table_inst.universe()->ids() == std::vector<std::string>{"r1", "r2", "r3"});
  CHECK(table_inst.x().ids() == std::vector<std::string>{"r1", "r3"});
  CHECK(table_inst.space().partition().blocks().size() == 2);

  CHECK(execute_command({"ingest", "--csv", csv, "--attrs", "color", "--decision", "d"})
            .exit_code == kExitUsage);
}

TEST_CASE("check campaigns succeed and report deterministically") {
  const std::vector<std::string> argv = {"check", "axioms", "--size", "4",
                                         "--trials", "10", "--seed", "5"};
  const auto first = execute_command(argv);
  CHECK(first.exit_code == kExitOk);
  CHECK(first.output.find("axioms: ok") != std::string::npos);
  CHECK(first.output.find("result: ok") != std::string::npos);
  CHECK(execute_command(argv).output == first.output);

  const auto unknown = execute_command({"check", "bogus"});
  CHECK(unknown.exit_code == kExitUsage);
}

TEST_CASE("witness shrinking finds a 1-minimal failing instance") {
  // A deliberately broken property: rejects any universe with 3+ elements.
  InstanceProperty too_big = [](const ParametricInstance& inst) -> std::optional<std::string> {
    if (inst.universe()->size() >= 3) return "universe has 3 or more elements";
    return std::nullopt;
  };
  const auto start = random_instance({9, 9, BlockLaw::uniform, 0.5});
  const ParametricInstance shrunk = shrink_instance(too_big, start);
  CHECK(shrunk.universe()->size() == 3);
  CHECK(too_big(shrunk).has_value());

  // A property that keys on a specific element surviving in the parameter.
  InstanceProperty keeps_first = [](const ParametricInstance& inst) -> std::optional<std::string> {
    if (inst.x().ids().size() >= 2) return "parameter has 2+ elements";
    return std::nullopt;
  };
  const auto dense = random_instance({3, 8, BlockLaw::fine, 1.0});
  const ParametricInstance shrunk2 = shrink_instance(keeps_first, dense);
  CHECK(shrunk2.universe()->size() == 2);
  CHECK(shrunk2.x().count() == 2);
}

}  // TEST_SUITE
