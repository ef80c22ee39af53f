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

#include "roughmat/parametric.hpp"

namespace roughmat {

// lower_approx validates that the parameter lives over the space's universe.
ParametricInstance::ParametricInstance(ApproximationSpace space, Subset x)
    : space_(std::make_shared<const ApproximationSpace>(std::move(space))),
      x_(std::move(x)),
      lower_x_(lower_approx(*space_, x_)) {}

bool is_independent(const ParametricInstance& inst, const Subset& i, Representation rep) {
  if (!same_universe(inst.universe(), i.universe())) {
    throw UniverseMismatch("is_independent: subset universe differs from the instance");
  }
  const ApproximationSpace& space = inst.space();
  switch (rep) {
    case Representation::lower_in_x:
      return lower_approx(space, i).is_subset_of(inst.x());
    case Representation::lower_in_lower_x:
      return lower_approx(space, i).is_subset_of(inst.lower_x());
    case Representation::lower_diff_empty:
      return lower_approx(space, i - inst.lower_x()).empty();
    case Representation::block_counting: {
      for (const Subset& block : space.partition().blocks()) {
        if (block.is_subset_of(inst.lower_x())) continue;
        if ((block & i).count() > block.count() - 1) return false;
      }
      return true;
    }
    case Representation::f_number:
      return lower_approx_number(space, i - inst.lower_x()) == 0;
  }
  return false;
}

std::size_t rank_closed_form(const ParametricInstance& inst, const Subset& y) {
  if (!same_universe(inst.universe(), y.universe())) {
    throw UniverseMismatch("rank_closed_form: subset universe differs from the instance");
  }
  return y.count() - lower_approx_number(inst.space(), y - inst.lower_x());
}

SetFamily circuits_closed_form(const ParametricInstance& inst) {
  const Subset outside = inst.lower_x().complement();
  std::vector<Subset> out;
  for (const Subset& block : inst.space().partition().blocks()) {
    if (block.is_subset_of(outside)) out.push_back(block);
  }
  return SetFamily::from_sets(inst.universe(), std::move(out));
}

SetFamily bases_closed_form(const ParametricInstance& inst, std::size_t output_cap) {
  const Subset outside = inst.lower_x().complement();
  std::vector<Subset> surviving;
  for (const Subset& block : inst.space().partition().blocks()) {
    if (block.is_subset_of(outside)) surviving.push_back(block);
  }
  Matroid component = partition_circuit_matroid(std::move(surviving), outside);
  const SetFamily partial = bases(component, kDefaultEnumerationCap, output_cap);
  std::vector<Subset> out;
  out.reserve(partial.size());
  for (const Subset& b : partial) out.push_back(b | inst.lower_x());
  return SetFamily::from_sets(inst.universe(), std::move(out));
}

Subset closure_closed_form(const ParametricInstance& inst, const Subset& y) {
  if (!same_universe(inst.universe(), y.universe())) {
    throw UniverseMismatch("closure_closed_form: subset universe differs from the instance");
  }
  const ApproximationSpace& space = inst.space();
  const std::size_t f_y = lower_approx_number(space, y - inst.lower_x());
  Subset out = y;
  for (std::size_t u : y.complement().indices()) {
    const std::size_t f_yu = lower_approx_number(space, y.with(u) - inst.lower_x());
    if (f_yu - f_y == 1) out.add(u);
  }
  return out;
}

Matroid parametric_matroid(const ParametricInstance& inst) {
  auto shared = std::make_shared<const ParametricInstance>(inst);
  auto oracle = [shared](const Subset& s) { return is_independent(*shared, s); };

  Matroid::ClosedForms cf;
  cf.rank = [shared](const Subset& y) { return rank_closed_form(*shared, y); };
  cf.circuits = [shared]() { return circuits_closed_form(*shared); };
  cf.bases = [shared](std::size_t cap) { return bases_closed_form(*shared, cap); };
  cf.closure = [shared](const Subset& y) { return closure_closed_form(*shared, y); };

  return Matroid(Subset::full_set(inst.universe()), std::move(oracle), Provenance::parametric,
                 std::move(cf));
}

Decomposition decompose(const ParametricInstance& inst) {
  const Subset outside = inst.lower_x().complement();
  std::vector<Subset> surviving;
  for (const Subset& block : inst.space().partition().blocks()) {
    if (block.is_subset_of(outside)) surviving.push_back(block);
  }
  Matroid pc = partition_circuit_matroid(std::move(surviving), outside);
  Matroid fr = free_matroid(inst.lower_x());
  Matroid sum = direct_sum(pc, fr);
  return Decomposition{std::move(pc), std::move(fr), std::move(sum)};
}

Representation representation_from_code(const std::string& code) {
  if (code == "lx") return Representation::lower_in_x;
  if (code == "llx") return Representation::lower_in_lower_x;
  if (code == "diff") return Representation::lower_diff_empty;
  if (code == "blocks") return Representation::block_counting;
  if (code == "fnum") return Representation::f_number;
  throw InvalidInput("unknown representation code '" + code +
                     "' (expected lx|llx|diff|blocks|fnum)");
}

const char* to_code(Representation rep) {
  switch (rep) {
    case Representation::lower_in_x: return "lx";
    case Representation::lower_in_lower_x: return "llx";
    case Representation::lower_diff_empty: return "diff";
    case Representation::block_counting: return "blocks";
    case Representation::f_number: return "fnum";
  }
  return "?";
}

}  // namespace roughmat
