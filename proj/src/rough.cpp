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

#include "roughmat/rough.hpp"

namespace roughmat {

namespace {
void require_space_universe(const ApproximationSpace& space, const Subset& x, const char* what) {
  if (!same_universe(space.universe(), x.universe())) {
    throw UniverseMismatch(std::string(what) + ": subset universe differs from the space");
  }
}
}  // namespace

Subset lower_approx(const ApproximationSpace& space, const Subset& x) {
  require_space_universe(space, x, "lower_approx");
  Subset out = Subset::empty_set(space.universe());
  for (const Subset& block : space.partition().blocks()) {
    if (block.is_subset_of(x)) out = out | block;
  }
  return out;
}

Subset upper_approx(const ApproximationSpace& space, const Subset& x) {
  require_space_universe(space, x, "upper_approx");
  Subset out = Subset::empty_set(space.universe());
  for (const Subset& block : space.partition().blocks()) {
    if (block.intersects(x)) out = out | block;
  }
  return out;
}

std::size_t lower_approx_number(const ApproximationSpace& space, const Subset& x) {
  require_space_universe(space, x, "lower_approx_number");
  std::size_t count = 0;
  for (const Subset& block : space.partition().blocks()) {
    if (block.is_subset_of(x)) ++count;
  }
  return count;
}

Subset lower_approx_within(const ApproximationSpace& space, const Subset& ground,
                           const Subset& x) {
  require_space_universe(space, ground, "lower_approx_within");
  require_space_universe(space, x, "lower_approx_within");
  Subset out = Subset::empty_set(space.universe());
  for (const Subset& block : space.partition().blocks()) {
    if (block.is_subset_of(ground) && block.is_subset_of(x)) out = out | block;
  }
  return out;
}

}  // namespace roughmat
