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

#include "lexdual/game.h"

#include <algorithm>

#include "lexdual/lexmax.h"

namespace lexdual {

GameForm::GameForm(GroundSet ground, std::vector<std::string> rows,
                   std::vector<std::string> cols,
                   std::vector<Element> outcomes)
    : ground_(std::move(ground)),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      outcomes_(std::move(outcomes)) {
  if (rows_.empty() || cols_.empty()) {
    throw std::invalid_argument("game form needs at least one row and column");
  }
  if (outcomes_.size() != rows_.size() * cols_.size()) {
    throw std::invalid_argument("outcome matrix does not match its labels");
  }
  for (Element o : outcomes_) {
    if (o.index >= ground_.size()) {
      throw std::invalid_argument("outcome outside the ground set");
    }
  }
}

Element GameForm::at(std::size_t row, std::size_t col) const {
  if (row >= rows_.size() || col >= cols_.size()) {
    throw std::out_of_range("situation out of range");
  }
  return outcomes_[row * cols_.size() + col];
}

std::vector<std::string> DefaultStrategyLabels(char player, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::string(1, player) + std::to_string(i));
  }
  return labels;
}

Edge RowEdge(const GameForm& form, std::size_t row) {
  if (row >= form.num_rows()) throw std::out_of_range("row out of range");
  Edge e;
  for (std::size_t j = 0; j < form.num_cols(); ++j) e = e.With(form.at(row, j));
  return e;
}

Edge ColEdge(const GameForm& form, std::size_t col) {
  if (col >= form.num_cols()) throw std::out_of_range("column out of range");
  Edge e;
  for (std::size_t i = 0; i < form.num_rows(); ++i) e = e.With(form.at(i, col));
  return e;
}

DualityError::DualityError(const GroundSet& ground, DualityViolation violation)
    : std::invalid_argument("not dual: " +
                            DescribeViolation(ground, violation)),
      violation_(violation) {}

TightGameForm BuildTightForm(const MultiHypergraph& a,
                             const MultiHypergraph& b,
                             const LinearOrder& order, Tiebreak tiebreak) {
  const DualityReport report = CheckDuality(a, b);
  if (!report.holds()) throw DualityError(a.ground(), *report.violation);
  if (order.size() != a.ground().size()) {
    throw std::invalid_argument("tiebreak order does not match the ground set");
  }
  std::vector<Element> outcomes;
  outcomes.reserve(a.size() * b.size());
  for (const Edge& row : a.edges()) {
    for (const Edge& col : b.edges()) {
      const Edge common = row & col;
      outcomes.push_back(tiebreak == Tiebreak::kMax ? OrderMax(order, common)
                                                    : OrderMin(order, common));
    }
  }
  GameForm form(a.ground(), DefaultStrategyLabels('A', a.size()),
                DefaultStrategyLabels('B', b.size()), std::move(outcomes));
  return {std::move(form), a, b};
}

std::optional<std::string> CheckTightness(const GameForm& form,
                                          const MultiHypergraph& a,
                                          const MultiHypergraph& b) {
  if (!(form.ground() == a.ground()) || !(form.ground() == b.ground())) {
    return "matrix and families use different ground sets";
  }
  if (form.num_rows() != a.size() || form.num_cols() != b.size()) {
    return "matrix is " + std::to_string(form.num_rows()) + "x" +
           std::to_string(form.num_cols()) + " but the families have " +
           std::to_string(a.size()) + " and " + std::to_string(b.size()) +
           " edges";
  }
  for (std::size_t i = 0; i < form.num_rows(); ++i) {
    for (std::size_t j = 0; j < form.num_cols(); ++j) {
      if (!(a.edge(i) & b.edge(j)).contains(form.at(i, j))) {
        return "outcome " + form.ground().label(form.at(i, j)) + " at (" +
               form.rows()[i] + "," + form.cols()[j] +
               ") is not in A" + std::to_string(i + 1) + " ∩ B" +
               std::to_string(j + 1);
      }
    }
  }
  return std::nullopt;
}

Game::Game(GameForm form_in, LinearOrder pref_a_in, LinearOrder pref_b_in)
    : form(std::move(form_in)),
      pref_a(std::move(pref_a_in)),
      pref_b(std::move(pref_b_in)) {
  if (pref_a.size() != form.ground().size() ||
      pref_b.size() != form.ground().size()) {
    throw std::invalid_argument("preferences must rank the whole ground set");
  }
}

NeCertificate IsNe(const Game& game, std::size_t row, std::size_t col) {
  const GameForm& g = game.form;
  const Element current = g.at(row, col);
  NeCertificate cert{row, col, std::nullopt};
  for (std::size_t i = 0; i < g.num_rows(); ++i) {
    if (game.pref_a.Prefers(g.at(i, col), current)) {
      cert.refutation = Deviation{Player::kAlice, i, g.at(i, col)};
      return cert;
    }
  }
  for (std::size_t j = 0; j < g.num_cols(); ++j) {
    if (game.pref_b.Prefers(g.at(row, j), current)) {
      cert.refutation = Deviation{Player::kBob, j, g.at(row, j)};
      return cert;
    }
  }
  return cert;
}

std::vector<std::pair<std::size_t, std::size_t>> EnumerateNe(const Game& game) {
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t i = 0; i < game.form.num_rows(); ++i) {
    for (std::size_t j = 0; j < game.form.num_cols(); ++j) {
      if (IsNe(game, i, j).is_ne()) found.emplace_back(i, j);
    }
  }
  return found;
}

std::size_t LexmaxStrategy(const Game& game, Player player) {
  const LinearOrder& pref = game.pref(player);
  const bool alice = player == Player::kAlice;
  const std::size_t n = alice ? game.form.num_rows() : game.form.num_cols();
  auto edge_of = [&](std::size_t s) {
    return alice ? RowEdge(game.form, s) : ColEdge(game.form, s);
  };
  std::size_t best = 0;
  Edge best_edge = edge_of(0);
  for (std::size_t s = 1; s < n; ++s) {
    const Edge e = edge_of(s);
    if (LexCompare(pref, e, best_edge) > 0) {
      best = s;
      best_edge = e;
    }
  }
  return best;
}

LexmaxNe FindLexmaxNe(const TightGameForm& tight, const LinearOrder& pref_a,
                      const LinearOrder& pref_b, Player player) {
  const bool alice = player == Player::kAlice;
  const MultiHypergraph& own = alice ? tight.a : tight.b;
  const MultiHypergraph& other = alice ? tight.b : tight.a;
  const LinearOrder& own_pref = alice ? pref_a : pref_b;
  const LinearOrder& other_pref = alice ? pref_b : pref_a;

  const Edge lexmax = LexmaxEnumerate(own, own_pref);
  const auto own_index = static_cast<std::size_t>(
      std::find(own.edges().begin(), own.edges().end(), lexmax) -
      own.edges().begin());
  const Element target = OrderMax(other_pref, lexmax);

  std::optional<std::size_t> reply;
  for (std::size_t s = 0; s < other.size(); ++s) {
    const Edge e = other.edge(s);
    if ((e & lexmax) == Edge::Singleton(target) &&
        OrderMax(own_pref, e) == target) {
      reply = s;
      break;
    }
  }
  if (!reply) {
    throw std::logic_error(
        "no reply meets the lexmax strategy in a single outcome; the "
        "families are not dual");
  }

  const std::size_t row = alice ? own_index : *reply;
  const std::size_t col = alice ? *reply : own_index;
  Game game(tight.form, pref_a, pref_b);
  LexmaxNe result{IsNe(game, row, col), lexmax, tight.form.at(row, col)};
  if (!result.certificate.is_ne()) {
    throw std::logic_error("lexmax situation is not an equilibrium");
  }
  return result;
}

}  // namespace lexdual
