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

#ifndef LEXDUAL_HYPERGRAPH_H_
#define LEXDUAL_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lexdual/ground.h"

namespace lexdual {

// An ordered list of nonempty edges over a ground set. Duplicates and
// nested edges are allowed and preserved.
class MultiHypergraph {
 public:
  // Throws std::invalid_argument if an edge is empty or leaves the ground.
  MultiHypergraph(GroundSet ground, std::vector<Edge> edges);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  Edge Union() const;
  // Some edge is a subset of `q`.
  bool ContainsEdgeWithin(Edge q) const;

  bool operator==(const MultiHypergraph&) const = default;

 private:
  GroundSet ground_;
  std::vector<Edge> edges_;
};

// No edge of h is a strict subset of edge i. Equal copies do not count.
bool IsMinimalEdge(const MultiHypergraph& h, std::size_t i);

// Minimal edges with duplicates collapsed, sorted by bitset value.
MultiHypergraph SpernerReduce(const MultiHypergraph& h);

bool IsSperner(const MultiHypergraph& h);

// `t` meets every edge of h (vacuously true for no edges).
bool IsTransversal(const MultiHypergraph& h, Edge t);

struct DisjointPair {
  std::size_t a_index = 0;
  std::size_t b_index = 0;
};

// A transversal of B that contains no edge of A. Reported minimal.
struct UncoveredTransversal {
  Edge transversal;
};

using DualityViolation = std::variant<DisjointPair, UncoveredTransversal>;

struct DualityReport {
  std::optional<DualityViolation> violation;

  bool holds() const { return !violation.has_value(); }
};

// Largest number of distinct elements covered by B that CheckDuality will
// enumerate subsets over.
inline constexpr std::size_t kMaxDualityCheckSupport = 26;

// Checks that A and B are dual: every A ∩ B is nonempty, and every
// transversal of B contains an edge of A. The second condition is checked by
// enumerating all subsets of the elements covered by B.
//
// Throws std::invalid_argument on ground mismatch or an empty edge list, and
// std::length_error if B covers more than kMaxDualityCheckSupport elements.
DualityReport CheckDuality(const MultiHypergraph& a, const MultiHypergraph& b);

// Human-readable description of a violation, using labels and 1-based
// edge indices.
std::string DescribeViolation(const GroundSet& ground,
                              const DualityViolation& violation);

// The unique Sperner hypergraph of minimal transversals of h, computed by
// Berge multiplication with absorption. Sorted by bitset value.
// Throws std::invalid_argument if h has no edges.
MultiHypergraph Dualize(const MultiHypergraph& h);

// `m` random nonempty edges of size at most `max_edge`; deterministic in
// `seed` across platforms.
MultiHypergraph RandomHypergraph(const GroundSet& ground, std::size_t m,
                                 std::size_t max_edge, std::uint64_t seed);

}  // namespace lexdual

#endif  // LEXDUAL_HYPERGRAPH_H_
