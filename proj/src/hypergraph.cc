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

#include "lexdual/hypergraph.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace lexdual {

MultiHypergraph::MultiHypergraph(GroundSet ground, std::vector<Edge> edges)
    : ground_(std::move(ground)), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    if (!e.FitsIn(ground_.size())) {
      throw std::invalid_argument("edge is not over the ground set");
    }
  }
}

const Edge& MultiHypergraph::edge(std::size_t i) const {
  if (i >= edges_.size()) throw std::out_of_range("edge index out of range");
  return edges_[i];
}

Edge MultiHypergraph::Union() const {
  Edge all;
  for (const Edge& e : edges_) all = all | e;
  return all;
}

bool MultiHypergraph::ContainsEdgeWithin(Edge q) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [q](Edge e) { return e.IsSubsetOf(q); });
}

bool IsMinimalEdge(const MultiHypergraph& h, std::size_t i) {
  const Edge target = h.edge(i);
  return std::none_of(h.edges().begin(), h.edges().end(),
                      [target](Edge e) { return e.IsStrictSubsetOf(target); });
}

namespace {

// Drops duplicates and strict supersets, then sorts.
std::vector<Edge> Minimize(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(),
            [](Edge x, Edge y) { return x.size() < y.size() ||
                                        (x.size() == y.size() && x < y); });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Edge> kept;
  for (Edge e : edges) {
    // Smaller edges come first, so only earlier ones can be subsets.
    const bool absorbed = std::any_of(
        kept.begin(), kept.end(), [e](Edge s) { return s.IsSubsetOf(e); });
    if (!absorbed) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void RequireSameGround(const MultiHypergraph& a, const MultiHypergraph& b) {
  if (!(a.ground() == b.ground())) {
    throw std::invalid_argument("hypergraphs are over different ground sets");
  }
}

}  // namespace

MultiHypergraph SpernerReduce(const MultiHypergraph& h) {
  return MultiHypergraph(h.ground(), Minimize(h.edges()));
}

bool IsSperner(const MultiHypergraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (i != j && h.edge(i).IsSubsetOf(h.edge(j))) return false;
    }
  }
  return true;
}

bool IsTransversal(const MultiHypergraph& h, Edge t) {
  if (!t.FitsIn(h.ground().size())) {
    throw std::invalid_argument("set is not over the hypergraph's ground set");
  }
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [t](Edge e) { return e.Intersects(t); });
}

DualityReport CheckDuality(const MultiHypergraph& a,
                           const MultiHypergraph& b) {
  RequireSameGround(a, b);
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("duality check needs nonempty edge lists");
  }

  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!a.edge(i).Intersects(b.edge(j))) {
        return {DisjointPair{i, j}};
      }
    }
  }

  // Elements outside ∪B never decide whether a set is a transversal of B,
  // and dropping them cannot create an A-edge inside it.
  const Edge support = b.Union();
  if (support.size() > kMaxDualityCheckSupport) {
    throw std::length_error("too many elements for exhaustive duality check");
  }
  const std::uint64_t mask = support.bits();
  std::uint64_t sub = 0;
  do {
    const Edge t = Edge::FromBits(sub);
    if (IsTransversal(b, t) && !a.ContainsEdgeWithin(t)) {
      Edge minimal = t;
      for (Element o : t) {
        if (IsTransversal(b, minimal.Without(o))) minimal = minimal.Without(o);
      }
      return {UncoveredTransversal{minimal}};
    }
    sub = (sub - mask) & mask;
  } while (sub != 0);
  return {};
}

std::string DescribeViolation(const GroundSet& ground,
                              const DualityViolation& violation) {
  std::ostringstream out;
  if (const auto* pair = std::get_if<DisjointPair>(&violation)) {
    out << "edges A" << pair->a_index + 1 << " and B" << pair->b_index + 1
        << " are disjoint";
  } else {
    const auto& uncovered = std::get<UncoveredTransversal>(violation);
    out << "transversal {" << FormatEdge(ground, uncovered.transversal)
        << "} of B contains no edge of A";
  }
  return out.str();
}

MultiHypergraph Dualize(const MultiHypergraph& h) {
  if (h.empty()) throw std::invalid_argument("cannot dualize an empty family");
  // Minimal transversals of the edges processed so far; start from {∅}.
  std::vector<Edge> partial{Edge()};
  for (const Edge& clause : Minimize(h.edges())) {
    std::vector<Edge> next;
    for (Edge t : partial) {
      if (t.Intersects(clause)) {
        next.push_back(t);
        continue;
      }
      for (Element o : clause) next.push_back(t.With(o));
    }
    partial = Minimize(std::move(next));
  }
  return MultiHypergraph(h.ground(), std::move(partial));
}

MultiHypergraph RandomHypergraph(const GroundSet& ground, std::size_t m,
                                 std::size_t max_edge, std::uint64_t seed) {
  const std::size_t k = ground.size();
  if (m == 0) throw std::invalid_argument("need at least one edge");
  if (max_edge == 0 || max_edge > k) {
    throw std::invalid_argument("max edge size must be in 1..k");
  }
  // mt19937_64 is fully specified; the distributions in <random> are not,
  // so draws are reduced by hand.
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  std::vector<Element> pool;
  for (std::size_t i = 0; i < k; ++i) pool.emplace_back(i);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = 1 + draw(max_edge);
    Edge e;
    for (std::size_t j = 0; j < size; ++j) {
      std::swap(pool[j], pool[j + draw(k - j)]);
      e = e.With(pool[j]);
    }
    edges.push_back(e);
  }
  return MultiHypergraph(ground, std::move(edges));
}

}  // namespace lexdual
