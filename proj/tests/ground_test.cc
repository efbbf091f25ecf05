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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lexdual/ground.h"
#include "testing.h"

namespace lexdual {
namespace {

using testing::Ascending;
using testing::E;
using testing::O;

TEST_CASE("ground set rejects bad labels") {
  CHECK_THROWS_AS(GroundSet({}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet({"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet::Numbered(65), std::invalid_argument);
  const GroundSet g = GroundSet::Numbered(64);
  CHECK(g.Full().size() == 64);
  CHECK(g.Find("o64") == Element(63));
  CHECK_FALSE(g.Find("o65").has_value());
}

TEST_CASE("edge iteration and formatting") {
  const GroundSet g = GroundSet::Numbered(7);
  CHECK(FormatEdge(g, E({7, 2, 3})) == "o2 o3 o7");
  CHECK(FormatEdge(g, Edge()) == "{}");
  CHECK(E({1, 3}).Elements() == std::vector<Element>{O(1), O(3)});
  CHECK(E({1, 2}).Complement(3) == E({3}));
}

TEST_CASE("linear order construction") {
  CHECK_THROWS_AS(LinearOrder::FromAscending({O(1), O(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearOrder::FromAscending({O(1), O(3)}),
                  std::invalid_argument);
  const LinearOrder order = Ascending({3, 1, 2});
  CHECK(order.rank(O(3)) == 0);
  CHECK(order.Prefers(O(2), O(1)));
  CHECK(order.Above(O(1)) == E({2}));
  CHECK(order.Reversed().ascending() ==
        std::vector<Element>{O(2), O(1), O(3)});
}

TEST_CASE("lex_compare examples") {
  const LinearOrder nat = LinearOrder::Identity(3);
  // A proper subset is larger.
  CHECK(LexCompare(nat, E({2}), E({1, 2})) > 0);
  CHECK(LexCompare(nat, E({1, 2}), E({2})) < 0);
  // The empty set is the largest.
  CHECK(LexCompare(nat, Edge(), E({3})) > 0);
  CHECK(LexCompare(nat, Edge(), E({1, 2, 3})) > 0);
  // {o2,o3} beats {o1,o3}: w = -3 against -5.
  CHECK(LexCompare(nat, E({2, 3}), E({1, 3})) > 0);
  CHECK(LexCompare(nat, E({1, 3}), E({1, 3})) == 0);
}

TEST_CASE("lex_compare rejects edges outside the ground") {
  const LinearOrder nat = LinearOrder::Identity(3);
  CHECK_THROWS_AS(LexCompare(nat, E({4}), E({1})), std::invalid_argument);
  CHECK_THROWS_AS(LexWeight(nat, E({5})), std::invalid_argument);
}

TEST_CASE("lex_weight examples") {
  const LinearOrder nat = LinearOrder::Identity(3);
  CHECK(LexWeight(nat, Edge()) == 0);
  CHECK(LexWeight(nat, E({1, 2, 3})) == -7);
  CHECK(LexWeight(nat, E({2, 3})) == -3);
  CHECK(LexWeight(nat, E({1, 3})) == -5);
  CHECK(LexWeight(LinearOrder::Identity(62), E({1})) == -(std::int64_t{1} << 61));
  CHECK_THROWS_AS(LexWeight(LinearOrder::Identity(63), E({1})),
                  std::invalid_argument);
}

TEST_CASE("order_max examples") {
  CHECK(OrderMax(LinearOrder::Identity(3), E({1})) == O(1));
  CHECK(OrderMax(LinearOrder::Identity(3), E({1, 3})) == O(3));
  CHECK(OrderMax(Ascending({3, 1, 2}), E({1, 3})) == O(1));
  CHECK_THROWS_AS(OrderMax(LinearOrder::Identity(3), Edge()),
                  std::invalid_argument);
}

TEST_CASE("lex order is a strict total order with subset dominance") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 1 + rng() % 64;
    const LinearOrder order = testing::RandomOrder(k, rng);
    const Edge x = testing::RandomSubset(k, rng);
    const Edge y = testing::RandomSubset(k, rng);
    const Edge z = testing::RandomSubset(k, rng);
    const auto xy = LexCompare(order, x, y);
    CHECK((xy == 0) == (x == y));
    CHECK((xy > 0) == (LexCompare(order, y, x) < 0));
    if (xy > 0 && LexCompare(order, y, z) > 0) {
      CHECK(LexCompare(order, x, z) > 0);
    }
    const Edge sub = x & y;
    if (sub != x) CHECK(LexCompare(order, sub, x) > 0);
  }
}

TEST_CASE("symmetric-difference rule agrees with weights") {
  // Exhaustive for k <= 5.
  for (std::size_t k = 1; k <= 5; ++k) {
    for (const LinearOrder& order : testing::AllOrders(k)) {
      const std::uint64_t n = std::uint64_t{1} << k;
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
          const Edge x = Edge::FromBits(a);
          const Edge y = Edge::FromBits(b);
          REQUIRE(LexCompare(order, x, y) ==
                  (LexWeight(order, x) <=> LexWeight(order, y)));
        }
      }
    }
  }
  // Sampled up to k = 12.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t k = 6 + rng() % 7;
    const LinearOrder order = testing::RandomOrder(k, rng);
    const Edge x = testing::RandomSubset(k, rng);
    const Edge y = testing::RandomSubset(k, rng);
    REQUIRE(LexCompare(order, x, y) ==
            (LexWeight(order, x) <=> LexWeight(order, y)));
  }
}

}  // namespace
}  // namespace lexdual
