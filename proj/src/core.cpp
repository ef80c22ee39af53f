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

#include "roughmat/core.hpp"

#include <algorithm>
#include <bit>

namespace roughmat {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_needed(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw InvalidInput("universe must contain at least one element");
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto [it, inserted] = index_.emplace(elements_[i], i);
    (void)it;
    if (!inserted) {
      throw InvalidInput("duplicate element identifier '" + elements_[i] + "' in universe");
    }
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UniversePtr make_universe(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

UniversePtr make_numbered_universe(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return make_universe(std::move(ids));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subset::Subset(UniversePtr universe, std::vector<std::uint64_t> words)
    : universe_(std::move(universe)), words_(std::move(words)) {}

Subset Subset::empty_set(UniversePtr universe) {
  const std::size_t n = universe->size();
  return Subset(std::move(universe), std::vector<std::uint64_t>(words_needed(n), 0));
}

Subset Subset::full_set(UniversePtr universe) {
  const std::size_t n = universe->size();
  std::vector<std::uint64_t> words(words_needed(n), ~std::uint64_t{0});
  const std::size_t spare = words.size() * kWordBits - n;
  if (spare > 0) words.back() >>= spare;
  return Subset(std::move(universe), std::move(words));
}

Subset Subset::of_indices(UniversePtr universe, const std::vector<std::size_t>& indices) {
  Subset s = empty_set(std::move(universe));
  for (std::size_t i : indices) s.add(i);
  return s;
}

Subset Subset::of_ids(UniversePtr universe, const std::vector<std::string>& ids) {
  Subset s = empty_set(universe);
  for (const std::string& id : ids) {
    auto idx = universe->index_of(id);
    if (!idx) throw InvalidInput("unknown element identifier '" + id + "'");
    s.add(*idx);
  }
  return s;
}

Subset Subset::from_mask64(UniversePtr universe, std::uint64_t mask) {
  if (universe->size() > 64) {
    throw InvalidInput("from_mask64 requires a universe of at most 64 elements");
  }
  Subset s = empty_set(std::move(universe));
  s.words_[0] = mask;
  return s;
}

void Subset::check_index(std::size_t index) const {
  if (index >= universe_->size()) {
    throw InvalidInput("element index " + std::to_string(index) + " outside universe of size " +
                       std::to_string(universe_->size()));
  }
}

bool Subset::contains(std::size_t index) const {
  check_index(index);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1u;
}

void Subset::add(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void Subset::remove(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_universe(*this, other, "is_subset_of");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool Subset::is_proper_subset_of(const Subset& other) const {
  return is_subset_of(other) && *this != other;
}

bool Subset::intersects(const Subset& other) const {
  require_same_universe(*this, other, "intersects");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

Subset Subset::operator|(const Subset& other) const {
  require_same_universe(*this, other, "union");
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

Subset Subset::operator&(const Subset& other) const {
  require_same_universe(*this, other, "intersection");
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

Subset Subset::operator-(const Subset& other) const {
  require_same_universe(*this, other, "difference");
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

Subset Subset::complement() const {
  Subset out = full_set(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

Subset Subset::with(std::size_t index) const {
  Subset out = *this;
  out.add(index);
  return out;
}

Subset Subset::without(std::size_t index) const {
  Subset out = *this;
  out.remove(index);
  return out;
}

bool Subset::operator==(const Subset& other) const {
  return same_universe(universe_, other.universe_) && words_ == other.words_;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(wi * kWordBits + static_cast<std::size_t>(bit));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::string> Subset::ids() const {
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(universe_->id_of(i));
  return out;
}

std::uint64_t Subset::mask64() const {
  if (universe_->size() > 64) {
    throw InvalidInput("mask64 requires a universe of at most 64 elements");
  }
  return words_[0];
}

void require_same_universe(const Subset& a, const Subset& b, const char* what) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch(std::string(what) + ": operands belong to different universes");
  }
}

bool canonical_less(const Subset& a, const Subset& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

SetFamily::SetFamily(UniversePtr universe) : universe_(std::move(universe)) {}

SetFamily SetFamily::from_sets(UniversePtr universe, std::vector<Subset> sets) {
  for (const Subset& s : sets) {
    if (!same_universe(s.universe(), universe)) {
      throw UniverseMismatch("SetFamily member belongs to a different universe");
    }
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  SetFamily f(std::move(universe));
  f.sets_ = std::move(sets);
  return f;
}

bool SetFamily::contains(const Subset& s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
  return it != sets_.end() && *it == s;
}

bool SetFamily::operator==(const SetFamily& other) const {
  return same_universe(universe_, other.universe_) && sets_ == other.sets_;
}

SetFamily extremal_sets(const SetFamily& family, ExtremalMode mode) {
  std::vector<Subset> out;
  for (const Subset& candidate : family) {
    bool extremal = true;
    for (const Subset& other : family) {
      const bool dominated = (mode == ExtremalMode::max) ? candidate.is_proper_subset_of(other)
                                                         : other.is_proper_subset_of(candidate);
      if (dominated) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back(candidate);
  }
  return SetFamily::from_sets(family.universe(), std::move(out));
}

}  // namespace roughmat
