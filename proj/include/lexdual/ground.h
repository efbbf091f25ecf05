// Copyright 2026 The lexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXDUAL_GROUND_H_
#define LEXDUAL_GROUND_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexdual {

inline constexpr std::size_t kMaxGroundSize = 64;
inline constexpr std::size_t kMaxWeightGroundSize = 62;

// Index of an element of the ground set. Labels only exist at the I/O
// boundary (see GroundSet); all algorithms work on indices.
struct Element {
  std::size_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

// A subset of a ground set of at most 64 elements, one bit per element.
class Edge {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Element;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return Element(static_cast<std::size_t>(std::countr_zero(rest_)));
    }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(Iterator, Iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Edge() = default;

  static constexpr Edge FromBits(std::uint64_t bits) { return Edge(bits); }
  static constexpr Edge Singleton(Element e) {
    return Edge(std::uint64_t{1} << e.index);
  }
  // The whole ground set {0, ..., k-1}.
  static constexpr Edge Full(std::size_t k) {
    return Edge(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Element e) const {
    return e.index < 64 && ((bits_ >> e.index) & 1) != 0;
  }

  constexpr Edge With(Element e) const { return *this | Singleton(e); }
  constexpr Edge Without(Element e) const { return *this - Singleton(e); }
  constexpr Edge Complement(std::size_t k) const { return Full(k) - *this; }

  constexpr bool IsSubsetOf(Edge other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool IsStrictSubsetOf(Edge other) const {
    return IsSubsetOf(other) && bits_ != other.bits_;
  }
  constexpr bool Intersects(Edge other) const {
    return (bits_ & other.bits_) != 0;
  }
  // True iff every element lies in {0, ..., k-1}.
  constexpr bool FitsIn(std::size_t k) const { return IsSubsetOf(Full(k)); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }
  std::vector<Element> Elements() const { return {begin(), end()}; }

  friend constexpr Edge operator&(Edge a, Edge b) {
    return Edge(a.bits_ & b.bits_);
  }
  friend constexpr Edge operator|(Edge a, Edge b) {
    return Edge(a.bits_ | b.bits_);
  }
  friend constexpr Edge operator^(Edge a, Edge b) {
    return Edge(a.bits_ ^ b.bits_);
  }
  // Set difference.
  friend constexpr Edge operator-(Edge a, Edge b) {
    return Edge(a.bits_ & ~b.bits_);
  }
  // Ordering by bitset value; this is the canonical order for Sperner
  // output, not the lexicographic order of LexCompare.
  friend constexpr auto operator<=>(Edge, Edge) = default;

 private:
  constexpr explicit Edge(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

// The labelled ground set O = {o_1, ..., o_k}, 1 <= k <= 64.
class GroundSet {
 public:
  // Throws std::invalid_argument on empty, duplicate or too many labels.
  explicit GroundSet(std::vector<std::string> labels);

  // Labels prefix1, ..., prefixk.
  static GroundSet Numbered(std::size_t k, std::string_view prefix = "o");

  std::size_t size() const { return labels_.size(); }
  Edge Full() const { return Edge::Full(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const;
  std::optional<Element> Find(std::string_view label) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Space-separated labels in ground order; "{}" for the empty set.
std::string FormatEdge(const GroundSet& ground, Edge edge);

// A linear order over {0, ..., k-1}. Rank 0 is the smallest element and
// rank k-1 the largest; as a player preference the largest is the best.
class LinearOrder {
 public:
  static LinearOrder Identity(std::size_t k);
  // Elements listed from smallest to largest. Throws std::invalid_argument
  // unless the list is a permutation of {0, ..., k-1}.
  static LinearOrder FromAscending(std::vector<Element> ascending);

  std::size_t size() const { return ascending_.size(); }
  std::size_t rank(Element e) const { return rank_.at(e.index); }
  Element at_rank(std::size_t r) const { return ascending_.at(r); }
  const std::vector<Element>& ascending() const { return ascending_; }

  // x ≻ y.
  bool Prefers(Element x, Element y) const { return rank(x) > rank(y); }
  LinearOrder Reversed() const;
  // Elements strictly above e.
  Edge Above(Element e) const;

  bool operator==(const LinearOrder& other) const {
    return ascending_ == other.ascending_;
  }

 private:
  explicit LinearOrder(std::vector<Element> ascending);

  std::vector<Element> ascending_;
  std::vector<std::size_t> rank_;
};

// Lexicographic order over subsets induced by `order`: the set that avoids
// the ≻-smallest element of the symmetric difference is the larger one.
// Returns greater iff x ≻_L y. Throws std::invalid_argument if either edge
// has elements outside the order's ground set.
std::strong_ordering LexCompare(const LinearOrder& order, Edge x, Edge y);

// Weight w(x) = -Σ_{o in x} 2^(k-1-rank(o)); x ≻_L y iff w(x) > w(y).
// Requires k <= 62.
std::int64_t LexWeight(const LinearOrder& order, Edge x);

// The ≻-maximum element of a nonempty edge.
Element OrderMax(const LinearOrder& order, Edge x);
Element OrderMin(const LinearOrder& order, Edge x);

}  // namespace lexdual

#endif  // LEXDUAL_GROUND_H_
