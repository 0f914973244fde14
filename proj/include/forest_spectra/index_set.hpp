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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace forest_spectra {

/// Fixed-capacity (64) set of small indices backed by a bit mask. The tag
/// keeps vertex sets and edge sets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr IndexSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) insert(i);
  }

  /// {0, 1, ..., count - 1}
  static constexpr IndexSet first(std::size_t count) {
    return IndexSet(count >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr IndexSet with(std::size_t i) const {
    IndexSet copy = *this;
    copy.insert(i);
    return copy;
  }
  constexpr IndexSet without(std::size_t i) const {
    IndexSet copy = *this;
    copy.erase(i);
    return copy;
  }

  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

}  // namespace forest_spectra
