// Copyright 2026 The reglab Authors
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
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace reglab {

// Subset of 0..n-1 stored as a packed bit-set.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, const std::vector<int>& members);

  static VertexSet full(int universe);
  static VertexSet range(int universe, int first, int last_inclusive);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return n_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int size() const;
  bool empty() const;
  std::vector<int> members() const;
  // Index of the smallest member, or -1.
  int first() const;
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  int intersection_size(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  // Order by characteristic vector read as a binary number with vertex i
  // weighted 2^i.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  const std::vector<std::uint64_t>& words() const { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace reglab
