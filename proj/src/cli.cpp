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

#include "roughmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "roughmat/checks.hpp"
#include "roughmat/format.hpp"
#include "roughmat/ingest.hpp"
#include "roughmat/instance_io.hpp"

namespace roughmat {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = token.find_last_not_of(" \t");
    out.push_back(token.substr(begin, end - begin + 1));
  }
  return out;
}

json subset_to_json(const Subset& s) { return json(s.ids()); }

json family_to_json(const SetFamily& f) {
  json out = json::array();
  for (const Subset& s : f) out.push_back(subset_to_json(s));
  return out;
}

// Mutable state shared by the subcommand callbacks.
struct Context {
  std::string format = "text";
  std::size_t cap = kDefaultEnumerationCap;
  bool cap_given = false;

  std::ostringstream out;
  int exit_code = kExitOk;

  std::size_t base_output_cap() const { return cap_given ? cap : kDefaultBaseOutputCap; }

  void emit(const std::string& query, const std::string& digest, const std::string& text,
            const json& machine) {
    if (format == "machine") {
      json doc;
      doc["query"] = query;
      doc["instance_digest"] = digest;
      doc["result"] = machine;
      out << doc.dump() << "\n";
    } else {
      out << text;
    }
  }
};

ParametricInstance load_instance(const std::string& path) {
  return parse_instance_document(read_file(path));
}

Subset parse_set_flag(const ParametricInstance& inst, const std::string& csv) {
  return Subset::of_ids(inst.universe(), split_csv_list(csv));
}

void run_approx(Context& ctx, const std::string& which, const std::string& input,
                const std::string& set_csv) {
  const ParametricInstance inst = load_instance(input);
  const Subset arg = parse_set_flag(inst, set_csv);
  const std::string query = "approx " + which;
  if (which == "fnum") {
    const std::size_t value = lower_approx_number(inst.space(), arg);
    ctx.emit(query, instance_digest(inst), std::to_string(value) + "\n", json(value));
    return;
  }
  const Subset result =
      (which == "lower") ? lower_approx(inst.space(), arg) : upper_approx(inst.space(), arg);
  ctx.emit(query, instance_digest(inst), format_subset(result) + "\n", subset_to_json(result));
}

void run_matroid(Context& ctx, const std::string& which, const std::string& input,
                 const std::string& set_csv, bool brute, const std::string& rep_code) {
  const ParametricInstance inst = load_instance(input);
  const Representation rep = representation_from_code(rep_code);
  const Matroid mx = parametric_matroid(inst);
  const std::string query = "matroid " + which;
  const std::string digest = instance_digest(inst);

  if (which == "independents") {
    const auto positions = Subset::full_set(inst.universe()).indices();
    if (positions.size() > ctx.cap) {
      throw CapExceeded("independents: universe of size " + std::to_string(positions.size()) +
                        " exceeds the enumeration cap of " + std::to_string(ctx.cap));
    }
    std::vector<Subset> members;
    const std::uint64_t limit = std::uint64_t{1} << positions.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset s = Subset::from_mask64(inst.universe(), mask);
      if (is_independent(inst, s, rep)) members.push_back(std::move(s));
    }
    const SetFamily family = SetFamily::from_sets(inst.universe(), std::move(members));
    ctx.emit(query, digest, format_family_lines(family), family_to_json(family));
    return;
  }
  if (which == "bases") {
    const SetFamily result = brute ? bases_brute(mx, ctx.cap)
                                   : bases_closed_form(inst, ctx.base_output_cap());
    ctx.emit(query, digest, format_family_lines(result), family_to_json(result));
    return;
  }
  if (which == "circuits") {
    const SetFamily result = brute ? circuits_brute(mx, ctx.cap) : circuits_closed_form(inst);
    ctx.emit(query, digest, format_family_lines(result), family_to_json(result));
    return;
  }
  if (which == "rank") {
    const Subset y = parse_set_flag(inst, set_csv);
    const std::size_t value = brute ? rank_brute(mx, y, ctx.cap) : rank_closed_form(inst, y);
    ctx.emit(query, digest, std::to_string(value) + "\n", json(value));
    return;
  }
  // closure
  const Subset y = parse_set_flag(inst, set_csv);
  const Subset result = brute ? closure_brute(mx, y, ctx.cap) : closure_closed_form(inst, y);
  ctx.emit(query, digest, format_subset(result) + "\n", subset_to_json(result));
}

void run_decompose(Context& ctx, const std::string& input) {
  const ParametricInstance inst = load_instance(input);
  const Decomposition dec = decompose(inst);
  const SetFamily component_circuits = circuits(dec.partition_circuit);

  std::string text;
  text += "lower: " + format_subset(inst.lower_x()) + "\n";
  text += "partition-circuit component: ground=" + format_subset(dec.partition_circuit.ground()) +
          " circuits=" + format_family_inline(component_circuits) + "\n";
  text += "free component: ground=" + format_subset(dec.free.ground()) + "\n";

  json machine;
  machine["lower"] = subset_to_json(inst.lower_x());
  machine["partition_circuit"] = {
      {"ground", subset_to_json(dec.partition_circuit.ground())},
      {"circuits", family_to_json(component_circuits)},
  };
  machine["free"] = {{"ground", subset_to_json(dec.free.ground())}};
  ctx.emit("decompose", instance_digest(inst), text, machine);
}

void run_checks(Context& ctx, const std::string& what, const CheckOptions& options) {
  const std::vector<CheckOutcome> outcomes = run_check(what, options);

  bool ok = true;
  long long checks = 0;
  std::string text;
  json campaigns = json::array();
  std::string witness;
  std::string violation;
  for (const CheckOutcome& outcome : outcomes) {
    text += render_outcome_line(outcome) + "\n";
    checks += outcome.checks;
    campaigns.push_back({{"name", outcome.name},
                         {"ok", outcome.ok},
                         {"instances", outcome.instances},
                         {"checks", outcome.checks}});
    if (!outcome.ok && ok) {
      ok = false;
      witness = outcome.witness;
      violation = outcome.violation;
    }
  }
  if (ok) {
    text += "result: ok (properties=" + std::to_string(outcomes.size()) +
            ", checks=" + std::to_string(checks) + ")\n";
  } else {
    text += "witness:\n" + witness;
    text += "result: VIOLATION " + violation + "\n";
    ctx.exit_code = kExitViolation;
  }

  json machine;
  machine["ok"] = ok;
  machine["checks"] = checks;
  machine["campaigns"] = campaigns;
  if (!ok) machine["witness"] = witness;
  ctx.emit("check " + what, "-", text, machine);
}

void emit_instance(Context& ctx, const std::string& query, const ParametricInstance& inst) {
  const std::string serialized = serialize_instance(inst);
  ctx.emit(query, instance_digest(inst), serialized, json::parse(serialized));
}

void run_generate(Context& ctx, const InstanceSpec& spec) {
  emit_instance(ctx, "generate", random_instance(spec));
}

void run_ingest(Context& ctx, const std::string& csv_path, const std::string& attrs_csv,
                const std::string& id_column, const std::string& decision,
                const std::string& value) {
  const InformationTable table = InformationTable::from_csv(read_file(csv_path), id_column);
  const std::vector<std::string> attrs = split_csv_list(attrs_csv);
  const Partition partition = indiscernibility_partition(table, attrs);
  Subset x = decision.empty() ? Subset::empty_set(table.object_universe())
                              : decision_target(table, decision, value);
  emit_instance(ctx, "ingest",
                ParametricInstance(ApproximationSpace(partition), std::move(x)));
}

}  // namespace

CommandResult execute_command(const std::vector<std::string>& argv) {
  CommandResult result;
  Context ctx;

  CLI::App app{"rough-set approximation operators and parametric matroids"};
  app.name("roughmat");
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--cap", ctx.cap, "Enumeration / output cap override")
      ->check(CLI::PositiveNumber);

  struct Flags {
    std::string input;
    std::string set_csv;
    std::string rep = "fnum";
    bool brute = false;
    bool closed = false;
    CheckOptions check;
    std::string check_what;
    InstanceSpec spec;
    std::string law = "uniform";
    std::string csv_path;
    std::string attrs;
    std::string id_column;
    std::string decision;
    std::string decision_value;
  } flags;

  auto* approx = app.add_subcommand("approx", "Approximation operators");
  approx->require_subcommand(1);
  approx->fallthrough();
  for (const char* which : {"lower", "upper", "fnum"}) {
    auto* sub = approx->add_subcommand(which);
    sub->fallthrough();
    sub->add_option("--input", flags.input, "Instance document")->required();
    sub->add_option("--set", flags.set_csv, "Comma-separated element identifiers")->required();
    sub->callback([&ctx, &flags, which] { run_approx(ctx, which, flags.input, flags.set_csv); });
  }

  auto* matroid = app.add_subcommand("matroid", "Parametric matroid queries");
  matroid->require_subcommand(1);
  matroid->fallthrough();
  for (const char* which : {"independents", "bases", "circuits", "rank", "closure"}) {
    auto* sub = matroid->add_subcommand(which);
    sub->fallthrough();
    sub->add_option("--input", flags.input, "Instance document")->required();
    auto* brute_flag = sub->add_flag("--brute", flags.brute, "Answer by enumeration");
    sub->add_flag("--closed-form", flags.closed, "Answer by the closed form (default)")
        ->excludes(brute_flag);
    sub->add_option("--rep", flags.rep, "Independence representation")
        ->check(CLI::IsMember({"lx", "llx", "diff", "blocks", "fnum"}));
    const bool needs_set = std::string(which) == "rank" || std::string(which) == "closure";
    if (needs_set) {
      sub->add_option("--set", flags.set_csv, "Comma-separated element identifiers")->required();
    }
    sub->callback([&ctx, &flags, which] {
      run_matroid(ctx, which, flags.input, flags.set_csv, flags.brute, flags.rep);
    });
  }

  auto* dec = app.add_subcommand("decompose", "Direct-sum decomposition");
  dec->fallthrough();
  dec->add_option("--input", flags.input, "Instance document")->required();
  dec->callback([&ctx, &flags] { run_decompose(ctx, flags.input); });

  auto* check = app.add_subcommand("check", "Verification campaigns");
  check->fallthrough();
  check
      ->add_option("what", flags.check_what, "Campaign name or 'all'")
      ->required()
      ->check(CLI::IsMember({"laws", "axioms", "reps", "theorem1", "rank", "closure", "circuits",
                             "bases", "lemmas", "endpoints", "all"}));
  check->add_option("--size", flags.check.size, "Largest random universe size")
      ->capture_default_str();
  check->add_option("--trials", flags.check.trials, "Random instances per campaign")
      ->capture_default_str();
  check->add_option("--seed", flags.check.seed, "Campaign seed")->capture_default_str();
  check->callback([&ctx, &flags] {
    flags.check.cap = ctx.cap;
    run_checks(ctx, flags.check_what, flags.check);
  });

  auto* gen = app.add_subcommand("generate", "Seeded random instance");
  gen->fallthrough();
  gen->add_option("--size", flags.spec.universe_size, "Universe size")->required();
  gen->add_option("--seed", flags.spec.seed, "Generator seed")->capture_default_str();
  gen->add_option("--law", flags.law, "Partition shape")
      ->check(CLI::IsMember({"uniform", "coarse", "fine"}))
      ->capture_default_str();
  gen->add_option("--x-density", flags.spec.x_density, "Parameter membership probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->callback([&ctx, &flags] {
    flags.spec.block_law = block_law_from_code(flags.law);
    run_generate(ctx, flags.spec);
  });

  auto* ingest = app.add_subcommand("ingest", "Instance from a CSV information table");
  ingest->fallthrough();
  ingest->add_option("--csv", flags.csv_path, "CSV file with a header row")->required();
  ingest->add_option("--attrs", flags.attrs, "Condition attributes (comma-separated)")
      ->required();
  ingest->add_option("--id-col", flags.id_column, "Object identifier column");
  auto* dec_opt = ingest->add_option("--decision", flags.decision, "Decision attribute");
  auto* val_opt = ingest->add_option("--value", flags.decision_value, "Decision value");
  dec_opt->needs(val_opt);
  val_opt->needs(dec_opt);
  ingest->callback([&ctx, &flags] {
    run_ingest(ctx, flags.csv_path, flags.attrs, flags.id_column, flags.decision,
               flags.decision_value);
  });

  std::vector<const char*> args;
  args.push_back("roughmat");
  for (const std::string& a : argv) args.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(args.size()), args.data());
    result.exit_code = ctx.exit_code;
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.diagnostics = std::string("usage error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
    return result;
  } catch (const CapExceeded& e) {
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitCap;
  } catch (const NotEquivalence& e) {
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInput;
  } catch (const UniverseMismatch& e) {
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInput;
  } catch (const InvalidInput& e) {
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInput;
  }

  result.output = ctx.out.str();
  return result;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const CommandResult result = execute_command(args);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}

}  // namespace roughmat
