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

#ifndef LEXDUAL_GAME_H_
#define LEXDUAL_GAME_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexdual/ground.h"
#include "lexdual/hypergraph.h"

namespace lexdual {

// A two-person game form g : X × Y -> O, stored row-major.
class GameForm {
 public:
  // Throws std::invalid_argument if the matrix shape does not match the
  // labels or an outcome lies outside the ground set.
  GameForm(GroundSet ground, std::vector<std::string> rows,
           std::vector<std::string> cols, std::vector<Element> outcomes);

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_.size(); }

  // Throws std::out_of_range.
  Element at(std::size_t row, std::size_t col) const;

  bool operator==(const GameForm&) const = default;

 private:
  GroundSet ground_;
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<Element> outcomes_;
};

// Labels A1..Am / B1..Bn.
std::vector<std::string> DefaultStrategyLabels(char player, std::size_t n);

// Outcomes of a row (resp. column) as an edge.
Edge RowEdge(const GameForm& form, std::size_t row);
Edge ColEdge(const GameForm& form, std::size_t col);

// Game form generated by a dual pair: row i is A_i, column j is B_j, and
// every outcome lies in A_i ∩ B_j.
struct TightGameForm {
  GameForm form;
  MultiHypergraph a;
  MultiHypergraph b;
};

class DualityError : public std::invalid_argument {
 public:
  DualityError(const GroundSet& ground, DualityViolation violation);

  const DualityViolation& violation() const { return violation_; }

 private:
  DualityViolation violation_;
};

enum class Tiebreak { kMax, kMin };

// outcome(i, j) = the `tiebreak`-extreme element of A_i ∩ B_j under
// `order`. Throws DualityError if a and b are not dual.
TightGameForm BuildTightForm(const MultiHypergraph& a,
                             const MultiHypergraph& b,
                             const LinearOrder& order,
                             Tiebreak tiebreak = Tiebreak::kMax);

// Checks an explicitly given matrix against a dual pair: shapes agree and
// every outcome lies in A_i ∩ B_j. Returns a description of the first
// failure, or nullopt.
std::optional<std::string> CheckTightness(const GameForm& form,
                                          const MultiHypergraph& a,
                                          const MultiHypergraph& b);

enum class Player { kAlice, kBob };

// Alice picks rows and Bob picks columns; both maximize their own order.
struct Game {
  GameForm form;
  LinearOrder pref_a;
  LinearOrder pref_b;

  // Throws std::invalid_argument if a preference does not rank the ground.
  Game(GameForm form, LinearOrder pref_a, LinearOrder pref_b);

  const LinearOrder& pref(Player p) const {
    return p == Player::kAlice ? pref_a : pref_b;
  }
};

struct Deviation {
  Player player = Player::kAlice;
  std::size_t strategy = 0;  // row for Alice, column for Bob
  Element outcome;           // strictly better for `player`
};

struct NeCertificate {
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<Deviation> refutation;

  bool is_ne() const { return !refutation.has_value(); }
};

// Reports the first strictly improving deviation, Alice's rows before Bob's
// columns, each in index order.
NeCertificate IsNe(const Game& game, std::size_t row, std::size_t col);

// All pure equilibria, row-major.
std::vector<std::pair<std::size_t, std::size_t>> EnumerateNe(const Game& game);

// The strategy whose outcome set is lexicographically largest under the
// player's own preference; lowest index on ties.
std::size_t LexmaxStrategy(const Game& game, Player player);

struct LexmaxNe {
  NeCertificate certificate;
  Edge strategy_edge;  // A⁰ for Alice, B⁰ for Bob
  Element outcome;
};

// Lexmax equilibrium of `player` in a tight game: that player takes a lexmax
// edge of its own family under its own preference, the opponent's best
// outcome in it is o⁰, and the reply is a listed strategy of the opponent
// meeting it exactly in o⁰ with o⁰ on top under the player's preference.
// Throws std::logic_error if no such reply exists or the result is not an
// equilibrium; neither happens for a dual pair.
LexmaxNe FindLexmaxNe(const TightGameForm& tight, const LinearOrder& pref_a,
                      const LinearOrder& pref_b, Player player);

}  // namespace lexdual

#endif  // LEXDUAL_GAME_H_
