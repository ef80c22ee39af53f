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

#include <memory>

#include "roughmat/matroid.hpp"
#include "roughmat/rough.hpp"

namespace roughmat {

/// An approximation space together with a parameter set X. The lower
/// approximation of X is computed once at construction; every query below
/// only ever needs it, so the instance is immutable and cheap to share.
class ParametricInstance {
 public:
  ParametricInstance(ApproximationSpace space, Subset x);

  const ApproximationSpace& space() const { return *space_; }
  const Subset& x() const { return x_; }
  const Subset& lower_x() const { return lower_x_; }
  const UniversePtr& universe() const { return space_->universe(); }

 private:
  std::shared_ptr<const ApproximationSpace> space_;
  Subset x_;
  Subset lower_x_;
};

/// The five provably equal membership predicates for the parametric family:
/// the defining containment, its lower-approximation form, the empty-
/// difference form, per-block counting, and the block-count-number form.
enum class Representation {
  lower_in_x,        // lower(I) inside X
  lower_in_lower_x,  // lower(I) inside lower(X)
  lower_diff_empty,  // lower(I - lower(X)) empty
  block_counting,    // every block not inside lower(X) misses an element of I
  f_number,          // zero blocks inside I - lower(X)
};

inline constexpr Representation kDefaultRepresentation = Representation::f_number;

/// Membership of i in the parametric family, evaluated through the selected
/// representation. All five agree; the default is the cheapest.
bool is_independent(const ParametricInstance& inst, const Subset& i,
                    Representation rep = kDefaultRepresentation);

/// The matroid on the whole universe whose independent sets form the
/// parametric family. Closed-form rank, circuits, bases and closure are
/// attached from the formulas below.
Matroid parametric_matroid(const ParametricInstance& inst);

struct Decomposition {
  Matroid partition_circuit;  // on the complement of lower(X)
  Matroid free;               // on lower(X)
  Matroid sum;                // their direct sum; agrees with is_independent
};

/// Splits the parametric matroid into a partition-circuit component on the
/// complement of lower(X) and a free component on lower(X).
Decomposition decompose(const ParametricInstance& inst);

/// |y| minus the number of blocks inside y - lower(X).
std::size_t rank_closed_form(const ParametricInstance& inst, const Subset& y);

/// Exactly the blocks contained in the complement of lower(X).
SetFamily circuits_closed_form(const ParametricInstance& inst);

/// Every base keeps lower(X) and drops exactly one element from each block
/// outside it; refuses when the product of block sizes exceeds the cap.
SetFamily bases_closed_form(const ParametricInstance& inst,
                            std::size_t output_cap = kDefaultBaseOutputCap);

/// y plus the elements whose addition completes a block inside the
/// complement of lower(X).
Subset closure_closed_form(const ParametricInstance& inst, const Subset& y);

Representation representation_from_code(const std::string& code);  // lx|llx|diff|blocks|fnum
const char* to_code(Representation rep);

}  // namespace roughmat
