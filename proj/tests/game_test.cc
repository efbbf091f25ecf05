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

#include "lexdual/game.h"
#include "lexdual/lexmax.h"
#include "testing.h"

namespace lexdual {
namespace {

using testing::Ascending;
using testing::E;
using testing::H;
using testing::O;

// Reference equilibrium test: the outcome is the best of its column for
// Alice and the best of its row for Bob.
bool BruteIsNe(const Game& g, std::size_t row, std::size_t col) {
  const Element here = g.form.at(row, col);
  return OrderMax(g.pref_a, ColEdge(g.form, col)) == here &&
         OrderMax(g.pref_b, RowEdge(g.form, row)) == here;
}

TEST_CASE("build_tight_form on the 5x6 instance") {
  const TightGameForm tight = BuildTightForm(
      testing::GoldenA(), testing::GoldenB(), LinearOrder::Identity(7));
  const GameForm& g = tight.form;
  CHECK(g.num_rows() == 5);
  CHECK(g.num_cols() == 6);
  CHECK(g.at(0, 0) == O(1));
  CHECK(g.at(4, 4) == O(4));
  CHECK(g.at(2, 2) == O(5));

  const GameForm reference = testing::GoldenMatrixForm();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const Edge common = tight.a.edge(i) & tight.b.edge(j);
      CHECK(common.contains(g.at(i, j)));
      if (common.size() == 1) CHECK(g.at(i, j) == reference.at(i, j));
    }
  }
  CHECK_FALSE(CheckTightness(reference, testing::GoldenA(), testing::GoldenB()));

  const TightGameForm low =
      BuildTightForm(testing::GoldenA(), testing::GoldenB(),
                     LinearOrder::Identity(7), Tiebreak::kMin);
  CHECK(low.form.at(2, 2) == O(2));
}

TEST_CASE("build_tight_form rejects non-dual pairs") {
  try {
    BuildTightForm(H(2, {E({1})}), H(2, {E({2})}), LinearOrder::Identity(2));
    FAIL("expected DualityError");
  } catch (const DualityError& e) {
    CHECK(std::holds_alternative<DisjointPair>(e.violation()));
  }
}

TEST_CASE("check_tightness reports a bad cell") {
  GameForm bad(GroundSet::Numbered(7), DefaultStrategyLabels('A', 5),
               DefaultStrategyLabels('B', 6),
               std::vector<Element>(30, O(3)));
  const auto problem = CheckTightness(bad, testing::GoldenA(), testing::GoldenB());
  REQUIRE(problem);
  CHECK(*problem == "outcome o3 at (A1,B1) is not in A1 ∩ B1");
}

TEST_CASE("row_edge and col_edge") {
  const GameForm g = testing::CounterexampleForm();
  CHECK(RowEdge(g, 0) == E({1, 2}));
  CHECK(ColEdge(g, 0) == E({1}));
  CHECK_THROWS_AS(RowEdge(g, 2), std::out_of_range);
  const GameForm constant(GroundSet::Numbered(2), {"r1", "r2"}, {"c1", "c2"},
                          {O(2), O(2), O(2), O(2)});
  CHECK(RowEdge(constant, 0) == E({2}));
  CHECK(RowEdge(constant, 1) == E({2}));
}

TEST_CASE("the 2x2 counterexample") {
  const Game game = testing::CounterexampleGame();
  CHECK(LexmaxStrategy(game, Player::kAlice) == 0);
  CHECK(LexmaxStrategy(game, Player::kBob) == 0);

  const NeCertificate joint = IsNe(game, 0, 0);
  CHECK_FALSE(joint.is_ne());
  REQUIRE(joint.refutation);
  CHECK(joint.refutation->player == Player::kBob);
  CHECK(joint.refutation->strategy == 1);
  CHECK(joint.refutation->outcome == O(2));

  CHECK(IsNe(game, 0, 1).is_ne());
  CHECK(IsNe(game, 1, 0).is_ne());
  using Situations = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(EnumerateNe(game) == Situations{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(IsNe(game, 2, 0), std::out_of_range);
}

TEST_CASE("the place of o1 in Alice's preference does not matter") {
  // Alice only needs o2 > o3.
  for (const LinearOrder& pref_a :
       {Ascending({1, 3, 2}), Ascending({3, 1, 2}), Ascending({3, 2, 1})}) {
    const Game game(testing::CounterexampleForm(), pref_a, Ascending({3, 1, 2}));
    CHECK(LexmaxStrategy(game, Player::kAlice) == 0);
    CHECK(LexmaxStrategy(game, Player::kBob) == 0);
    CHECK_FALSE(IsNe(game, 0, 0).is_ne());
    using Situations = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(EnumerateNe(game) == Situations{{0, 1}, {1, 0}});
  }
}

TEST_CASE("one-by-one form") {
  const GameForm g(GroundSet::Numbered(1), {"r"}, {"c"}, {O(1)});
  const Game game(g, LinearOrder::Identity(1), LinearOrder::Identity(1));
  using Situations = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(EnumerateNe(game) == Situations{{0, 0}});

  const TightGameForm tight =
      BuildTightForm(H(1, {E({1})}), H(1, {E({1})}), LinearOrder::Identity(1));
  const LexmaxNe ne = FindLexmaxNe(tight, LinearOrder::Identity(1),
                                   LinearOrder::Identity(1), Player::kAlice);
  CHECK(ne.certificate.row == 0);
  CHECK(ne.certificate.col == 0);
}

TEST_CASE("lexmax strategy and lexmax NE on the 5x6 form") {
  const TightGameForm tight = BuildTightForm(
      testing::GoldenA(), testing::GoldenB(), LinearOrder::Identity(7));
  const LinearOrder pref_a = LinearOrder::Identity(7);
  const LinearOrder pref_b = Ascending({1, 2, 3, 5, 6, 7, 4});
  const Game game(tight.form, pref_a, pref_b);
  CHECK(LexmaxStrategy(game, Player::kAlice) == 4);

  const LexmaxNe ne = FindLexmaxNe(tight, pref_a, pref_b, Player::kAlice);
  CHECK(ne.strategy_edge == E({3, 4}));
  CHECK(ne.certificate.row == 4);
  CHECK(ne.certificate.col == 4);
  CHECK(ne.outcome == O(4));
  CHECK(ne.certificate.is_ne());
}

TEST_CASE("lexmax NE properties on random tight forms") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 8;
    const GroundSet ground = GroundSet::Numbered(k);
    const MultiHypergraph a =
        RandomHypergraph(ground, 1 + rng() % 6, 1 + rng() % k, rng());
    const MultiHypergraph b = Dualize(a);
    const TightGameForm tight =
        BuildTightForm(a, b, testing::RandomOrder(k, rng));
    const LinearOrder pref_a = testing::RandomOrder(k, rng);
    const LinearOrder pref_b = testing::RandomOrder(k, rng);
    const Game game(tight.form, pref_a, pref_b);

    const auto all = EnumerateNe(game);
    CHECK_FALSE(all.empty());
    for (std::size_t i = 0; i < tight.form.num_rows(); ++i) {
      for (std::size_t j = 0; j < tight.form.num_cols(); ++j) {
        REQUIRE(IsNe(game, i, j).is_ne() == BruteIsNe(game, i, j));
      }
    }

    const LexmaxNe alice = FindLexmaxNe(tight, pref_a, pref_b, Player::kAlice);
    const LexmaxNe bob = FindLexmaxNe(tight, pref_a, pref_b, Player::kBob);
    CHECK(BruteIsNe(game, alice.certificate.row, alice.certificate.col));
    CHECK(BruteIsNe(game, bob.certificate.row, bob.certificate.col));
    CHECK(alice.strategy_edge == LexmaxEnumerate(a, pref_a));

    // Alice's row does not depend on Bob's preference.
    const LinearOrder other_b = testing::RandomOrder(k, rng);
    CHECK(FindLexmaxNe(tight, pref_a, other_b, Player::kAlice).certificate.row ==
          alice.certificate.row);

    // Opposite preferences: both lexmax equilibria give the same outcome.
    const LinearOrder reversed = pref_a.Reversed();
    CHECK(FindLexmaxNe(tight, pref_a, reversed, Player::kAlice).outcome ==
          FindLexmaxNe(tight, pref_a, reversed, Player::kBob).outcome);
  }
}

}  // namespace
}  // namespace lexdual
