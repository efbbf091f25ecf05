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

#include "lexdual/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lexdual/game.h"
#include "lexdual/ground.h"
#include "lexdual/hypergraph.h"
#include "lexdual/instance.h"
#include "lexdual/lexmax.h"
#include "lexdual/oracle.h"

namespace lexdual {
namespace {

// Input or usage problem; exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A "no" answer about a well-formed input; exit 1.
class NegativeVerdict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": error: " + e.message());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": error: " + e.what());
  }
}

LinearOrder OrderOf(const Instance& inst) {
  return inst.order ? *inst.order : LinearOrder::Identity(inst.ground.size());
}

const MultiHypergraph& Family(const Instance& inst, const std::string& name) {
  const auto& family = name == "B" ? inst.b : inst.a;
  if (!family) throw UsageError("instance has no edges for family " + name);
  return *family;
}

const LinearOrder& Pref(const Instance& inst, Player player) {
  const auto& pref = player == Player::kAlice ? inst.pref_a : inst.pref_b;
  if (!pref) {
    throw UsageError(player == Player::kAlice ? "instance has no pref_a line"
                                              : "instance has no pref_b line");
  }
  return *pref;
}

void PrintEdges(std::ostream& out, const MultiHypergraph& h) {
  for (const Edge& e : h.edges()) out << FormatEdge(h.ground(), e) << '\n';
}

GameForm FormFromMatrix(const Instance& inst) {
  const auto& m = *inst.matrix;
  std::vector<Element> outcomes;
  for (const auto& row : m) outcomes.insert(outcomes.end(), row.begin(), row.end());
  return GameForm(inst.ground,
                  inst.rows ? *inst.rows : DefaultStrategyLabels('A', m.size()),
                  inst.cols ? *inst.cols
                            : DefaultStrategyLabels('B', m.front().size()),
                  std::move(outcomes));
}

void RequireDual(const Instance& inst) {
  const DualityReport report =
      CheckDuality(Family(inst, "A"), Family(inst, "B"));
  if (!report.holds()) {
    throw NegativeVerdict("NOT DUAL: " +
                          DescribeViolation(inst.ground, *report.violation));
  }
}

// Tight form of (A, B): the explicit matrix if present (checked for
// tightness), otherwise built with the instance order as tiebreak.
TightGameForm ResolveTightForm(const Instance& inst, Tiebreak tiebreak) {
  RequireDual(inst);
  const MultiHypergraph& a = Family(inst, "A");
  const MultiHypergraph& b = Family(inst, "B");
  if (inst.matrix) {
    GameForm form = FormFromMatrix(inst);
    if (auto problem = CheckTightness(form, a, b)) {
      throw NegativeVerdict("NOT TIGHT: " + *problem);
    }
    return {std::move(form), a, b};
  }
  TightGameForm tight = BuildTightForm(a, b, OrderOf(inst), tiebreak);
  if (inst.rows || inst.cols) {
    std::vector<Element> outcomes;
    for (std::size_t i = 0; i < tight.form.num_rows(); ++i) {
      for (std::size_t j = 0; j < tight.form.num_cols(); ++j) {
        outcomes.push_back(tight.form.at(i, j));
      }
    }
    tight.form = GameForm(inst.ground, inst.rows ? *inst.rows : tight.form.rows(),
                          inst.cols ? *inst.cols : tight.form.cols(),
                          std::move(outcomes));
  }
  return tight;
}

std::string Situation(const GameForm& form, std::size_t row, std::size_t col) {
  return "(" + form.rows()[row] + "," + form.cols()[col] + ")";
}

struct Options {
  std::string file;
  std::string family = "A";
  std::string via = "oracle";
  std::string strategy = "linear";
  bool trace = false;
  std::string element;
  std::string tiebreak = "max";
  std::string player;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t max_edge = 0;
  std::uint64_t seed = 0;
};

int RunCheckDual(const Options& opt, std::ostream& out) {
  RequireDual(LoadInstance(opt.file));
  out << "DUAL\n";
  return kExitOk;
}

int RunDualize(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  PrintEdges(out, Dualize(Family(inst, opt.family)));
  return kExitOk;
}

int RunReduce(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  PrintEdges(out, SpernerReduce(Family(inst, opt.family)));
  return kExitOk;
}

int RunLexmax(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  const MultiHypergraph& h = Family(inst, opt.family);
  const LinearOrder order = OrderOf(inst);
  if (opt.via == "enumerate") {
    if (opt.trace) throw UsageError("--trace requires --via oracle");
    out << FormatEdge(inst.ground, LexmaxEnumerate(h, order)) << '\n';
    return kExitOk;
  }
  ExplicitOracle oracle(h);
  const LexmaxTrace trace = LexmaxOracle(
      oracle, order,
      opt.strategy == "dichotomy" ? SearchStrategy::kDichotomy
                                  : SearchStrategy::kLinear);
  out << FormatEdge(inst.ground, trace.edge) << '\n';
  if (opt.trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const LexmaxStep& s = trace.steps[i];
      out << "step " << i + 1 << ": " << inst.ground.label(s.element)
          << " t=" << s.t << " calls=" << s.calls << '\n';
    }
    out << "oracle calls: " << trace.total_calls << '\n';
  }
  return kExitOk;
}

int RunWitness(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  const MultiHypergraph& h = Family(inst, opt.family);
  const LinearOrder order = OrderOf(inst);
  const auto element = inst.ground.Find(opt.element);
  if (!element) throw UsageError("unknown element '" + opt.element + "'");
  ExplicitOracle oracle(h);
  const Edge a0 = LexmaxOracle(oracle, order, SearchStrategy::kLinear).edge;
  if (!a0.contains(*element)) {
    throw UsageError("element " + opt.element + " is not in the lexmax edge {" +
                     FormatEdge(inst.ground, a0) + "}");
  }
  out << FormatEdge(inst.ground, WitnessB0(oracle, order, a0, *element))
      << '\n';
  return kExitOk;
}

int RunGameForm(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  RequireDual(inst);
  const TightGameForm tight = BuildTightForm(
      Family(inst, "A"), Family(inst, "B"), OrderOf(inst),
      opt.tiebreak == "min" ? Tiebreak::kMin : Tiebreak::kMax);
  const GameForm& form = tight.form;
  for (std::size_t i = 0; i < form.num_rows(); ++i) {
    for (std::size_t j = 0; j < form.num_cols(); ++j) {
      out << (j > 0 ? " " : "") << inst.ground.label(form.at(i, j));
    }
    out << '\n';
  }
  return kExitOk;
}

int RunNe(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  GameForm form = inst.matrix ? FormFromMatrix(inst)
                              : ResolveTightForm(inst, Tiebreak::kMax).form;
  const LinearOrder& pref_a = Pref(inst, Player::kAlice);
  const Game game(std::move(form), pref_a, Pref(inst, Player::kBob));
  const auto found = EnumerateNe(game);
  if (found.empty()) throw NegativeVerdict("NO NE");
  for (const auto& [row, col] : found) {
    out << Situation(game.form, row, col) << ' '
        << inst.ground.label(game.form.at(row, col)) << '\n';
  }
  return kExitOk;
}

int RunLexmaxNe(const Options& opt, std::ostream& out) {
  const Instance inst = LoadInstance(opt.file);
  const TightGameForm tight = ResolveTightForm(inst, Tiebreak::kMax);
  const Player player = opt.player == "bob" ? Player::kBob : Player::kAlice;
  const LinearOrder& pref_a = Pref(inst, Player::kAlice);
  const LexmaxNe ne =
      FindLexmaxNe(tight, pref_a, Pref(inst, Player::kBob), player);
  out << Situation(tight.form, ne.certificate.row, ne.certificate.col) << ' '
      << inst.ground.label(ne.outcome) << " NE\n";
  return kExitOk;
}

int RunGen(const Options& opt, std::ostream& out) {
  if (opt.k < 1 || opt.k > kMaxGroundSize) {
    throw UsageError("--k must be in 1..64");
  }
  if (opt.m < 1) throw UsageError("--m must be at least 1");
  if (opt.max_edge < 1 || opt.max_edge > opt.k) {
    throw UsageError("--max-edge must be in 1..k");
  }
  const GroundSet ground = GroundSet::Numbered(opt.k);
  Instance inst{ground};
  inst.a = RandomHypergraph(ground, opt.m, opt.max_edge, opt.seed);
  inst.b = Dualize(*inst.a);
  out << FormatInstance(inst);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Lexicographic combinatorics on dual multi-hypergraphs",
               "lexdual"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&opt](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "Instance file")->required();
  };
  auto add_family = [&opt](CLI::App* sub) {
    sub->add_option("--family", opt.family, "Family to use (A or B)")
        ->check(CLI::IsMember({"A", "B"}));
  };

  auto* check_dual = app.add_subcommand("check-dual", "Check that A and B are dual");
  add_file(check_dual);

  auto* dualize = app.add_subcommand("dualize", "Minimal transversals of a family");
  add_file(dualize);
  add_family(dualize);

  auto* reduce = app.add_subcommand("reduce", "Minimal edges of a family");
  add_file(reduce);
  add_family(reduce);

  auto* lexmax = app.add_subcommand("lexmax", "Lexicographically maximal edge");
  add_file(lexmax);
  add_family(lexmax);
  lexmax->add_option("--via", opt.via, "oracle or enumerate")
      ->check(CLI::IsMember({"oracle", "enumerate"}));
  lexmax->add_option("--strategy", opt.strategy, "linear or dichotomy")
      ->check(CLI::IsMember({"linear", "dichotomy"}));
  lexmax->add_flag("--trace", opt.trace, "Print oracle steps");

  auto* witness = app.add_subcommand(
      "witness", "Dual edge meeting the lexmax edge exactly in one element");
  add_file(witness);
  add_family(witness);
  witness->add_option("--element", opt.element, "Element of the lexmax edge")
      ->required();

  auto* gameform = app.add_subcommand("gameform", "Tight game form of (A, B)");
  add_file(gameform);
  gameform->add_option("--tiebreak", opt.tiebreak, "max or min")
      ->check(CLI::IsMember({"max", "min"}));

  auto* ne = app.add_subcommand("ne", "All pure Nash equilibria");
  add_file(ne);

  auto* lexmax_ne = app.add_subcommand("lexmax-ne", "Lexmax Nash equilibrium");
  add_file(lexmax_ne);
  lexmax_ne->add_option("--player", opt.player, "alice or bob")
      ->required()
      ->check(CLI::IsMember({"alice", "bob"}));

  auto* gen = app.add_subcommand("gen", "Random instance with its dual");
  gen->add_option("--k", opt.k, "Ground set size")->required();
  gen->add_option("--m", opt.m, "Number of edges")->required();
  gen->add_option("--max-edge", opt.max_edge, "Largest edge size")->required();
  gen->add_option("--seed", opt.seed, "Random seed")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lexdual: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check_dual) return RunCheckDual(opt, out);
    if (*dualize) return RunDualize(opt, out);
    if (*reduce) return RunReduce(opt, out);
    if (*lexmax) return RunLexmax(opt, out);
    if (*witness) return RunWitness(opt, out);
    if (*gameform) return RunGameForm(opt, out);
    if (*ne) return RunNe(opt, out);
    if (*lexmax_ne) return RunLexmaxNe(opt, out);
    if (*gen) return RunGen(opt, out);
  } catch (const NegativeVerdict& e) {
    out << e.what() << '\n';
    return kExitNegative;
  } catch (const UsageError& e) {
    err << "lexdual: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lexdual: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lexdual
