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

#include "roughmat/checks.hpp"

#include <algorithm>
#include <bit>

#include "roughmat/format.hpp"
#include "roughmat/instance_io.hpp"
#include "roughmat/relation.hpp"

namespace roughmat {

namespace {

struct PropertyEval {
  std::optional<std::string> violation;
  long long checks = 0;
};

using CountedProperty = std::function<PropertyEval(const ParametricInstance&)>;

// Per-instance sampling must be deterministic in the instance alone so that
// the shrinker can re-evaluate candidates; derive the stream from the
// serialized form.
std::uint64_t fnv64(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

SplitMix64 instance_rng(const ParametricInstance& inst, std::uint64_t salt) {
  return SplitMix64(fnv64(serialize_instance(inst)) ^ salt);
}

// Fast f_number predicate over 64-bit masks. Blocks inside lower(X) can
// never land in I - lower(X), so only the outside blocks are kept.
struct MaskOracle {
  std::uint64_t lower_x = 0;
  std::vector<std::uint64_t> outside_blocks;

  explicit MaskOracle(const ParametricInstance& inst) {
    lower_x = inst.lower_x().mask64();
    for (const Subset& block : inst.space().partition().blocks()) {
      const std::uint64_t b = block.mask64();
      if ((b & lower_x) == 0) outside_blocks.push_back(b);
    }
  }

  bool independent(std::uint64_t s) const {
    const std::uint64_t m = s & ~lower_x;
    for (std::uint64_t p : outside_blocks) {
      if ((p & m) == p) return false;
    }
    return true;
  }
};

std::string describe_subset(const ParametricInstance& inst, std::uint64_t mask) {
  return format_subset(Subset::from_mask64(inst.universe(), mask));
}

CheckOutcome drive(const std::string& name, const std::vector<ParametricInstance>& instances,
                   const CountedProperty& prop) {
  CheckOutcome out;
  out.name = name;
  for (const ParametricInstance& inst : instances) {
    PropertyEval eval = prop(inst);
    ++out.instances;
    out.checks += eval.checks;
    if (eval.violation) {
      out.ok = false;
      InstanceProperty bare = [&prop](const ParametricInstance& i) {
        return prop(i).violation;
      };
      ParametricInstance shrunk = shrink_instance(bare, inst);
      out.violation = prop(shrunk).violation.value_or(*eval.violation);
      out.witness = serialize_instance(shrunk) + "violation: " + out.violation + "\n";
      break;
    }
  }
  return out;
}

std::vector<ParametricInstance> sweep_instances(const CheckOptions& opt,
                                                std::size_t random_size_limit) {
  std::vector<ParametricInstance> out =
      exhaustive_instances(std::min<std::size_t>(opt.size, 5));
  const std::size_t random_max = std::min(opt.size, random_size_limit);
  auto random = random_instances(opt.trials, 1, random_max, opt.seed);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

std::uint64_t full_mask(std::size_t n) {
  return (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance generation and shrinking
// ---------------------------------------------------------------------------

std::vector<ParametricInstance> exhaustive_instances(std::size_t max_size) {
  std::vector<ParametricInstance> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    UniversePtr universe = make_numbered_universe(n);
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
      Partition partition = partition_from_labels(universe, labels);
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        out.emplace_back(ApproximationSpace(partition),
                         Subset::from_mask64(universe, mask));
      }
    });
  }
  return out;
}

std::vector<ParametricInstance> random_instances(std::size_t count, std::size_t min_size,
                                                 std::size_t max_size, std::uint64_t seed) {
  if (min_size < 1 || max_size < min_size) {
    throw InvalidInput("random_instances: need 1 <= min_size <= max_size");
  }
  std::vector<ParametricInstance> out;
  out.reserve(count);
  SplitMix64 master(seed);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceSpec spec;
    spec.seed = master.next_u64();
    spec.universe_size = min_size + master.next_below(max_size - min_size + 1);
    spec.block_law = static_cast<BlockLaw>(i % 3);
    spec.x_density = master.next_unit();
    out.push_back(random_instance(spec));
  }
  return out;
}

std::optional<ParametricInstance> remove_element(const ParametricInstance& inst,
                                                 std::size_t index) {
  const Universe& old = *inst.universe();
  if (old.size() <= 1) return std::nullopt;

  std::vector<std::string> ids;
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (i != index) ids.push_back(old.id_of(i));
  }
  UniversePtr universe = make_universe(ids);

  std::vector<Subset> blocks;
  for (const Subset& block : inst.space().partition().blocks()) {
    std::vector<std::string> kept;
    for (const std::string& id : block.ids()) {
      if (id != old.id_of(index)) kept.push_back(id);
    }
    if (!kept.empty()) blocks.push_back(Subset::of_ids(universe, kept));
  }

  std::vector<std::string> x_ids;
  for (const std::string& id : inst.x().ids()) {
    if (id != old.id_of(index)) x_ids.push_back(id);
  }

  return ParametricInstance(ApproximationSpace(Partition(universe, std::move(blocks))),
                            Subset::of_ids(universe, x_ids));
}

ParametricInstance shrink_instance(const InstanceProperty& property,
                                   ParametricInstance failing) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    const std::size_t n = failing.universe()->size();
    for (std::size_t e = 0; e < n; ++e) {
      auto candidate = remove_element(failing, e);
      if (!candidate) continue;
      if (property(*candidate)) {
        failing = std::move(*candidate);
        progressed = true;
        break;
      }
    }
  }
  return failing;
}

// ---------------------------------------------------------------------------
// Approximation operator laws
// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> laws_on_pair(const ApproximationSpace& space, const Subset& x,
                                        const Subset& y) {
  const Subset lx = lower_approx(space, x);
  const Subset ly = lower_approx(space, y);

  if (!lx.is_subset_of(x)) return "lower(x) not contained in x for x=" + format_subset(x);
  if (lower_approx(space, x & y) != (lx & ly)) {
    return "lower(x&y) != lower(x)&lower(y) for x=" + format_subset(x) +
           " y=" + format_subset(y);
  }
  if (x.is_subset_of(y) && !lx.is_subset_of(ly)) {
    return "monotonicity of lower failed for x=" + format_subset(x) + " y=" + format_subset(y);
  }
  if (!(lx | ly).is_subset_of(lower_approx(space, x | y))) {
    return "lower(x)|lower(y) not contained in lower(x|y) for x=" + format_subset(x) +
           " y=" + format_subset(y);
  }
  if (lower_approx(space, lx) != lx) return "lower not idempotent for x=" + format_subset(x);
  if (upper_approx(space, x) != lower_approx(space, x.complement()).complement()) {
    return "upper(x) != complement of lower(complement(x)) for x=" + format_subset(x);
  }
  if (upper_approx(space, lx) != lx) return "upper(lower(x)) != lower(x) for x=" + format_subset(x);

  const std::size_t fx = lower_approx_number(space, x);
  if (lower_approx_number(space, x & y) > fx || fx > lower_approx_number(space, x | y)) {
    return "monotonicity of the approximation number failed for x=" + format_subset(x) +
           " y=" + format_subset(y);
  }
  if (lower_approx_number(space, lx) != fx) {
    return "f(x) != f(lower(x)) for x=" + format_subset(x);
  }
  std::size_t covered = 0;
  for (const Subset& block : space.partition().blocks()) {
    if (block.is_subset_of(x)) covered += block.count();
  }
  if (lx.count() != covered) {
    return "|lower(x)| != total size of contained blocks for x=" + format_subset(x);
  }
  return std::nullopt;
}

PropertyEval laws_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const ApproximationSpace& space = inst.space();
  const UniversePtr& universe = inst.universe();
  const std::size_t n = universe->size();

  const Subset empty = Subset::empty_set(universe);
  const Subset full = Subset::full_set(universe);
  if (!lower_approx(space, empty).empty()) {
    eval.violation = "lower(empty) is nonempty";
    return eval;
  }
  if (lower_approx(space, full) != full) {
    eval.violation = "lower(universe) != universe";
    return eval;
  }
  if (!upper_approx(space, empty).empty() || upper_approx(space, full) != full) {
    eval.violation = "upper operator wrong on a trivial argument";
    return eval;
  }
  if (lower_approx_number(space, full) != space.partition().block_count()) {
    eval.violation = "f(universe) != number of blocks";
    return eval;
  }
  ++eval.checks;

  const std::uint64_t subsets = std::uint64_t{1} << n;
  const bool exhaustive = n <= 8;  // 4^8 = 65536 pairs <= the 1e5 budget
  auto run_pair = [&](std::uint64_t mx, std::uint64_t my) -> bool {
    ++eval.checks;
    eval.violation = laws_on_pair(space, Subset::from_mask64(universe, mx),
                                  Subset::from_mask64(universe, my));
    return !eval.violation.has_value();
  };

  if (exhaustive) {
    for (std::uint64_t mx = 0; mx < subsets; ++mx) {
      for (std::uint64_t my = 0; my < subsets; ++my) {
        if (!run_pair(mx, my)) return eval;
      }
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0x1a55);
    const std::uint64_t all = full_mask(n);
    for (int k = 0; k < 500; ++k) {
      if (!run_pair(rng.next_u64() & all, rng.next_u64() & all)) return eval;
    }
  }
  return eval;
}

}  // namespace

CheckOutcome check_laws(const CheckOptions& opt) {
  std::vector<ParametricInstance> instances;
  const std::size_t ex_max = std::min<std::size_t>(opt.size, 6);
  for (std::size_t n = 1; n <= ex_max; ++n) {
    UniversePtr universe = make_numbered_universe(n);
    for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
      instances.emplace_back(ApproximationSpace(partition_from_labels(universe, labels)),
                             Subset::empty_set(universe));
    });
  }
  auto random = random_instances(opt.trials, 1, std::min<std::size_t>(opt.size, 16), opt.seed);
  instances.insert(instances.end(), random.begin(), random.end());
  return drive("laws", instances, laws_property);
}

// ---------------------------------------------------------------------------
// Independence axioms
// ---------------------------------------------------------------------------

namespace {

PropertyEval axioms_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const MaskOracle oracle(inst);
  const std::uint64_t limit = std::uint64_t{1} << n;

  std::vector<char> indep(limit, 0);
  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (oracle.independent(mask)) {
      indep[mask] = 1;
      members.push_back(mask);
    }
  }

  if (!indep[0]) {
    eval.violation = "axiom I1: the empty set is not independent";
    return eval;
  }
  for (std::uint64_t mask : members) {
    std::uint64_t bits = mask;
    while (bits != 0) {
      const std::uint64_t lowest = bits & (~bits + 1);
      if (!indep[mask ^ lowest]) {
        eval.violation = "axiom I2: " + describe_subset(inst, mask) +
                         " is independent but its subset " +
                         describe_subset(inst, mask ^ lowest) + " is not";
        return eval;
      }
      bits ^= lowest;
    }
  }
  for (std::uint64_t a : members) {
    const int ca = std::popcount(a);
    for (std::uint64_t b : members) {
      if (ca >= std::popcount(b)) continue;
      bool augmented = false;
      std::uint64_t candidates = b & ~a;
      while (candidates != 0) {
        const std::uint64_t lowest = candidates & (~candidates + 1);
        if (indep[a | lowest]) {
          augmented = true;
          break;
        }
        candidates ^= lowest;
      }
      if (!augmented) {
        eval.violation = "axiom I3: no augmentation of " + describe_subset(inst, a) +
                         " from " + describe_subset(inst, b);
        return eval;
      }
    }
  }

  // At desk scale, tie the fast path to the public checker.
  if (n <= 5) {
    std::vector<Subset> sets;
    for (std::uint64_t mask : members) {
      sets.push_back(Subset::from_mask64(inst.universe(), mask));
    }
    AxiomVerdict verdict =
        check_independence_axioms(SetFamily::from_sets(inst.universe(), std::move(sets)));
    if (!verdict.holds) {
      eval.violation = std::string("public axiom checker disagrees: reports ") +
                       to_string(*verdict.violated);
      return eval;
    }
  }
  ++eval.checks;
  return eval;
}

}  // namespace

CheckOutcome check_axioms(const CheckOptions& opt) {
  return drive("axioms", sweep_instances(opt, 10), axioms_property);
}

// ---------------------------------------------------------------------------
// Representation equivalence
// ---------------------------------------------------------------------------

namespace {

PropertyEval reps_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  static constexpr Representation kReps[] = {
      Representation::lower_in_x, Representation::lower_in_lower_x,
      Representation::lower_diff_empty, Representation::block_counting,
      Representation::f_number};

  auto run_subset = [&](std::uint64_t mask) -> bool {
    ++eval.checks;
    const Subset s = Subset::from_mask64(inst.universe(), mask);
    const bool expected = is_independent(inst, s, Representation::lower_in_x);
    for (Representation rep : kReps) {
      if (is_independent(inst, s, rep) != expected) {
        eval.violation = std::string("representation ") + to_code(rep) + " disagrees with lx on " +
                         format_subset(s);
        return false;
      }
    }
    return true;
  };

  if (n <= 16) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!run_subset(mask)) return eval;
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0x7e75);
    for (int k = 0; k < 4096; ++k) {
      if (!run_subset(rng.next_u64() & full_mask(n))) return eval;
    }
  }
  return eval;
}

}  // namespace

CheckOutcome check_reps(const CheckOptions& opt) {
  return drive("reps", sweep_instances(opt, 16), reps_property);
}

// ---------------------------------------------------------------------------
// Direct-sum decomposition
// ---------------------------------------------------------------------------

namespace {

PropertyEval theorem1_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const Decomposition dec = decompose(inst);
  const Matroid mx = parametric_matroid(inst);

  auto enumerate = [&](const Subset& ground, const auto& fn) -> bool {
    const auto positions = ground.indices();
    const std::uint64_t limit = std::uint64_t{1} << positions.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset s = Subset::empty_set(inst.universe());
      std::uint64_t bits = mask;
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        s.add(positions[static_cast<std::size_t>(bit)]);
        bits &= bits - 1;
      }
      ++eval.checks;
      if (!fn(s)) return false;
    }
    return true;
  };

  if (n > 16) {
    // Sampled agreement only; the sweep sizes never reach this in practice.
    SplitMix64 rng = instance_rng(inst, 0x7401);
    for (int k = 0; k < 4096; ++k) {
      const Subset s = Subset::from_mask64(inst.universe(), rng.next_u64() & full_mask(n));
      ++eval.checks;
      if (dec.sum.is_independent(s) != is_independent(inst, s)) {
        eval.violation = "direct sum disagrees with the family on " + format_subset(s);
        return eval;
      }
    }
    return eval;
  }

  const bool agreed = enumerate(Subset::full_set(inst.universe()), [&](const Subset& s) {
    if (dec.sum.is_independent(s) != is_independent(inst, s)) {
      eval.violation = "direct sum disagrees with the family on " + format_subset(s);
      return false;
    }
    return true;
  });
  if (!agreed) return eval;

  const Matroid to_pc = restriction(mx, dec.partition_circuit.ground());
  const bool pc_ok = enumerate(dec.partition_circuit.ground(), [&](const Subset& s) {
    if (to_pc.is_independent(s) != dec.partition_circuit.is_independent(s)) {
      eval.violation =
          "restriction to the complement component disagrees on " + format_subset(s);
      return false;
    }
    return true;
  });
  if (!pc_ok) return eval;

  const Matroid to_free = restriction(mx, dec.free.ground());
  enumerate(dec.free.ground(), [&](const Subset& s) {
    if (to_free.is_independent(s) != dec.free.is_independent(s)) {
      eval.violation = "restriction to the free component disagrees on " + format_subset(s);
      return false;
    }
    return true;
  });
  return eval;
}

}  // namespace

CheckOutcome check_theorem1(const CheckOptions& opt) {
  return drive("theorem1", sweep_instances(opt, 16), theorem1_property);
}

// ---------------------------------------------------------------------------
// Closed forms against brute force
// ---------------------------------------------------------------------------

namespace {

PropertyEval rank_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const Matroid mx = parametric_matroid(inst);

  if (n <= 12) {
    const BruteProfile profile = brute_profile(mx);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const Subset y = Subset::from_mask64(inst.universe(), mask);
      ++eval.checks;
      if (rank_closed_form(inst, y) != profile.rank_of(y)) {
        eval.violation = "closed-form rank disagrees with brute force on " + format_subset(y);
        return eval;
      }
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0x4a9c);
    for (int k = 0; k < 20; ++k) {
      const Subset y = Subset::from_mask64(inst.universe(), rng.next_u64() & full_mask(n));
      ++eval.checks;
      if (rank_closed_form(inst, y) != brute_rank_within(mx, y)) {
        eval.violation = "closed-form rank disagrees with brute force on " + format_subset(y);
        return eval;
      }
    }
  }
  return eval;
}

PropertyEval closure_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const Matroid mx = parametric_matroid(inst);
  const BruteProfile profile = brute_profile(mx);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const Subset y = Subset::from_mask64(inst.universe(), mask);
    ++eval.checks;
    if (closure_closed_form(inst, y) != profile.closure_of(y)) {
      eval.violation = "closed-form closure disagrees with brute force on " + format_subset(y);
      return eval;
    }
  }
  return eval;
}

PropertyEval circuits_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const Matroid mx = parametric_matroid(inst);
  const SetFamily closed = circuits_closed_form(inst);

  const BruteProfile profile = brute_profile(mx);
  ++eval.checks;
  if (closed != profile.circuits) {
    eval.violation = "closed-form circuits " + format_family_inline(closed) +
                     " differ from brute force " + format_family_inline(profile.circuits);
    return eval;
  }

  if (n <= 8) {
    // The Min characterization: minimal sets whose difference from lower(X)
    // contains exactly one block.
    const ApproximationSpace& space = inst.space();
    std::vector<Subset> candidates;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const Subset c = Subset::from_mask64(inst.universe(), mask);
      if (lower_approx_number(space, c - inst.lower_x()) == 1) candidates.push_back(c);
    }
    const SetFamily min_form = extremal_sets(
        SetFamily::from_sets(inst.universe(), std::move(candidates)), ExtremalMode::min);
    ++eval.checks;
    if (closed != min_form) {
      eval.violation = "closed-form circuits differ from the Min characterization";
      return eval;
    }
  }
  return eval;
}

PropertyEval bases_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const Matroid mx = parametric_matroid(inst);
  const SetFamily closed = bases_closed_form(inst);

  const BruteProfile profile = brute_profile(mx);
  ++eval.checks;
  if (closed != profile.bases) {
    eval.violation = "closed-form bases " + format_family_inline(closed) +
                     " differ from brute force " + format_family_inline(profile.bases);
    return eval;
  }

  if (n <= 8) {
    // The Max characterization over the full power set.
    const ApproximationSpace& space = inst.space();
    std::vector<Subset> candidates;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const Subset i = Subset::from_mask64(inst.universe(), mask);
      if (lower_approx_number(space, i - inst.lower_x()) == 0) candidates.push_back(i);
    }
    const SetFamily max_form = extremal_sets(
        SetFamily::from_sets(inst.universe(), std::move(candidates)), ExtremalMode::max);
    ++eval.checks;
    if (closed != max_form) {
      eval.violation = "closed-form bases differ from the Max characterization";
      return eval;
    }
  }
  return eval;
}

}  // namespace

CheckOutcome check_rank(const CheckOptions& opt) {
  return drive("rank", sweep_instances(opt, 16), rank_property);
}

CheckOutcome check_closure(const CheckOptions& opt) {
  return drive("closure", sweep_instances(opt, 12), closure_property);
}

CheckOutcome check_circuits(const CheckOptions& opt) {
  return drive("circuits", sweep_instances(opt, 12), circuits_property);
}

CheckOutcome check_bases(const CheckOptions& opt) {
  return drive("bases", sweep_instances(opt, 12), bases_property);
}

// ---------------------------------------------------------------------------
// Lemmas and the equivalence-restriction criterion
// ---------------------------------------------------------------------------

namespace {

PropertyEval lemmas_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const ApproximationSpace& space = inst.space();
  const UniversePtr& universe = inst.universe();
  const std::uint64_t lower_mask = inst.lower_x().mask64();
  const std::uint64_t outside_mask = full_mask(n) & ~lower_mask;

  // Restricted lower approximation is empty iff the plain one is, for
  // arguments inside lower(X).
  auto lemma_a = [&](std::uint64_t mask) -> bool {
    const Subset i = Subset::from_mask64(universe, mask & lower_mask);
    ++eval.checks;
    const bool restricted_empty =
        lower_approx_within(space, inst.lower_x(), i).empty();
    const bool plain_empty = lower_approx(space, i).empty();
    if (restricted_empty != plain_empty) {
      eval.violation = "restricted lower approximation disagrees on " + format_subset(i);
      return false;
    }
    return true;
  };

  // Union with a lower-empty set inside lower(X) leaves the lower
  // approximation of the outside part unchanged.
  auto lemma_b = [&](std::uint64_t m1, std::uint64_t m2) -> bool {
    const Subset x1 = Subset::from_mask64(universe, m1 & lower_mask);
    if (!lower_approx(space, x1).empty()) return true;
    const Subset x2 = Subset::from_mask64(universe, m2 & outside_mask);
    ++eval.checks;
    if (lower_approx(space, x1 | x2) != lower_approx(space, x2)) {
      eval.violation = "lower(x1|x2) != lower(x2) for x1=" + format_subset(x1) +
                       " x2=" + format_subset(x2);
      return false;
    }
    return true;
  };

  const BinaryRelation relation = relation_from_partition(space.partition());
  auto criterion = [&](std::uint64_t mask) -> bool {
    const Subset x = Subset::from_mask64(universe, mask);
    ++eval.checks;
    const bool fixed_point = (lower_approx(space, x) == x);
    const bool equivalence_on_x =
        check_equivalence_on(restrict_relation(relation, x), x).holds;
    if (fixed_point != equivalence_on_x) {
      eval.violation = "x == lower(x) does not match the restricted-equivalence test for x=" +
                       format_subset(x);
      return false;
    }
    return true;
  };

  if (n <= 10) {
    const std::size_t lower_bits = static_cast<std::size_t>(std::popcount(lower_mask));
    const std::size_t outside_bits = n - lower_bits;
    const auto lower_positions = inst.lower_x().indices();
    const auto outside_positions = (inst.lower_x().complement()).indices();
    auto spread = [](const std::vector<std::size_t>& positions, std::uint64_t mask) {
      std::uint64_t out = 0;
      for (std::size_t j = 0; j < positions.size(); ++j) {
        if (mask & (std::uint64_t{1} << j)) out |= std::uint64_t{1} << positions[j];
      }
      return out;
    };
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << lower_bits); ++m) {
      if (!lemma_a(spread(lower_positions, m))) return eval;
    }
    for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << lower_bits); ++m1) {
      const std::uint64_t x1 = spread(lower_positions, m1);
      for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << outside_bits); ++m2) {
        if (!lemma_b(x1, spread(outside_positions, m2))) return eval;
      }
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0x1e44);
    for (int k = 0; k < 100; ++k) {
      if (!lemma_a(rng.next_u64())) return eval;
      if (!lemma_b(rng.next_u64(), rng.next_u64())) return eval;
    }
  }

  if (n <= 6) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!criterion(mask)) return eval;
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0xc817);
    for (int k = 0; k < 50; ++k) {
      if (!criterion(rng.next_u64() & full_mask(n))) return eval;
    }
  }
  return eval;
}

}  // namespace

CheckOutcome check_lemmas(const CheckOptions& opt) {
  return drive("lemmas", sweep_instances(opt, 16), lemmas_property);
}

// ---------------------------------------------------------------------------
// Degenerate endpoints
// ---------------------------------------------------------------------------

namespace {

PropertyEval endpoints_property(const ParametricInstance& inst) {
  PropertyEval eval;
  const std::size_t n = inst.universe()->size();
  const ApproximationSpace& space = inst.space();
  const UniversePtr& universe = inst.universe();

  const ParametricInstance at_empty(space, Subset::empty_set(universe));
  const ParametricInstance at_full(space, Subset::full_set(universe));

  auto run_subset = [&](std::uint64_t mask) -> bool {
    const Subset s = Subset::from_mask64(universe, mask);
    eval.checks += 2;
    if (is_independent(at_empty, s) != lower_approx(space, s).empty()) {
      eval.violation =
          "empty parameter does not match partition-circuit independence on " + format_subset(s);
      return false;
    }
    if (!is_independent(at_full, s)) {
      eval.violation = "full parameter fails to make " + format_subset(s) + " independent";
      return false;
    }
    return true;
  };

  if (n <= 12) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!run_subset(mask)) return eval;
    }
  } else {
    SplitMix64 rng = instance_rng(inst, 0xe4d9);
    for (int k = 0; k < 4096; ++k) {
      if (!run_subset(rng.next_u64() & full_mask(n))) return eval;
    }
  }
  return eval;
}

}  // namespace

CheckOutcome check_endpoints(const CheckOptions& opt) {
  return drive("endpoints", sweep_instances(opt, 12), endpoints_property);
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

std::string render_outcome_line(const CheckOutcome& outcome) {
  if (outcome.ok) {
    return outcome.name + ": ok (instances=" + std::to_string(outcome.instances) +
           ", checks=" + std::to_string(outcome.checks) + ")";
  }
  return outcome.name + ": VIOLATION " + outcome.violation;
}

std::vector<CheckOutcome> run_check(const std::string& what, const CheckOptions& opt) {
  using Campaign = CheckOutcome (*)(const CheckOptions&);
  static const std::vector<std::pair<std::string, Campaign>> kCampaigns = {
      {"laws", check_laws},         {"axioms", check_axioms},
      {"reps", check_reps},         {"theorem1", check_theorem1},
      {"rank", check_rank},         {"closure", check_closure},
      {"circuits", check_circuits}, {"bases", check_bases},
      {"lemmas", check_lemmas},     {"endpoints", check_endpoints},
  };

  std::vector<CheckOutcome> out;
  if (what == "all") {
    for (const auto& [name, campaign] : kCampaigns) {
      (void)name;
      out.push_back(campaign(opt));
    }
    return out;
  }
  for (const auto& [name, campaign] : kCampaigns) {
    if (name == what) {
      out.push_back(campaign(opt));
      return out;
    }
  }
  throw InvalidInput("unknown check '" + what +
                     "' (expected laws|axioms|reps|theorem1|rank|closure|circuits|bases|"
                     "lemmas|endpoints|all)");
}

}  // namespace roughmat
