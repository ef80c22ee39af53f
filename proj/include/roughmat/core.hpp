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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roughmat/errors.hpp"

namespace roughmat {

/// A finite ground set. Element identifiers are opaque strings; every set
/// operation in the library runs on the dense indices 0..size()-1 fixed
/// here at construction.
class Universe {
 public:
  /// Throws InvalidInput on an empty list or duplicate identifiers.
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::string& id_of(std::size_t index) const { return elements_.at(index); }
  const std::vector<std::string>& ids() const { return elements_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  bool operator==(const Universe& other) const { return elements_ == other.elements_; }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements);

/// Convenience: identifiers "1".."n".
UniversePtr make_numbered_universe(std::size_t n);

bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// A subset of a Universe with bitset semantics, stored as packed 64-bit
/// words. Value type; cheap to copy for the universe sizes this library
/// targets.
class Subset {
 public:
  static Subset empty_set(UniversePtr universe);
  static Subset full_set(UniversePtr universe);
  static Subset of_indices(UniversePtr universe, const std::vector<std::size_t>& indices);
  /// Throws InvalidInput on an identifier not in the universe.
  static Subset of_ids(UniversePtr universe, const std::vector<std::string>& ids);
  /// Bits 0..63 of `mask` name element indices; universe size must be <= 64.
  static Subset from_mask64(UniversePtr universe, std::uint64_t mask);

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_->size(); }

  bool contains(std::size_t index) const;
  void add(std::size_t index);
  void remove(std::size_t index);

  std::size_t count() const;
  bool empty() const;

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  /// Set difference: elements of *this not in other.
  Subset operator-(const Subset& other) const;
  Subset complement() const;

  Subset with(std::size_t index) const;
  Subset without(std::size_t index) const;

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

  /// Ascending element indices.
  std::vector<std::size_t> indices() const;
  /// Element identifiers in index order.
  std::vector<std::string> ids() const;

  /// Throws InvalidInput when the universe has more than 64 elements.
  std::uint64_t mask64() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  Subset(UniversePtr universe, std::vector<std::uint64_t> words);
  void check_index(std::size_t index) const;

  UniversePtr universe_;
  std::vector<std::uint64_t> words_;
};

void require_same_universe(const Subset& a, const Subset& b, const char* what);

/// Canonical order on subsets of one universe: by cardinality, then
/// lexicographically over the ascending index sequences.
bool canonical_less(const Subset& a, const Subset& b);

/// A deduplicated collection of subsets of one universe, kept in canonical
/// order so that equal families compare equal member-by-member.
class SetFamily {
 public:
  explicit SetFamily(UniversePtr universe);
  static SetFamily from_sets(UniversePtr universe, std::vector<Subset> sets);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  bool contains(const Subset& s) const;

  bool operator==(const SetFamily& other) const;
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

 private:
  UniversePtr universe_;
  std::vector<Subset> sets_;  // canonical order, no duplicates
};

enum class ExtremalMode { max, min };

/// Max (no proper superset in the family) or Min (no proper subset) of a
/// family. The result is an antichain under inclusion.
SetFamily extremal_sets(const SetFamily& family, ExtremalMode mode);

}  // namespace roughmat
