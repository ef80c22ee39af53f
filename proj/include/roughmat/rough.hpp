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

#include "roughmat/partition.hpp"

namespace roughmat {

/// A universe together with an equivalence relation, carried in its
/// canonical partition form. All approximation operators run as block
/// scans over the partition.
class ApproximationSpace {
 public:
  explicit ApproximationSpace(Partition partition) : partition_(std::move(partition)) {}

  const Partition& partition() const { return partition_; }
  const UniversePtr& universe() const { return partition_.universe(); }

 private:
  Partition partition_;
};

/// Union of the blocks entirely contained in x.
Subset lower_approx(const ApproximationSpace& space, const Subset& x);

/// Union of the blocks that meet x.
Subset upper_approx(const ApproximationSpace& space, const Subset& x);

/// Number of blocks entirely contained in x.
std::size_t lower_approx_number(const ApproximationSpace& space, const Subset& x);

/// Lower approximation taken against only the blocks lying inside `ground`.
/// For arguments inside `ground` this coincides with lower_approx; the
/// equality is what the restricted-relation lemmas assert, and tests pin it.
Subset lower_approx_within(const ApproximationSpace& space, const Subset& ground,
                           const Subset& x);

}  // namespace roughmat
