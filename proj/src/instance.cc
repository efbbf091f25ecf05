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

#include "lexdual/instance.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lexdual {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits `s` (starting at 1-based column `first_column`) on whitespace.
std::vector<Token> SplitWords(std::string_view s, std::size_t first_column) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !IsSpace(s[i])) ++i;
    if (i > start) words.push_back({s.substr(start, i - start), first_column + start});
  }
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Instance Run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      ParseLine(line_no, text_.substr(pos, end - pos));
      pos = end + 1;
    }
    return Finish(line_no);
  }

 private:
  [[noreturn]] void Fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  void ParseLine(std::size_t line_no, std::string_view line) {
    line_ = line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t start = 0;
    while (start < line.size() && IsSpace(line[start])) ++start;
    if (start == line.size()) return;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      Fail(start + 1, "expected 'directive: ...'");
    }
    std::string_view key = line.substr(start, colon - start);
    while (!key.empty() && IsSpace(key.back())) key.remove_suffix(1);
    const std::string_view rest = line.substr(colon + 1);
    const std::size_t rest_column = colon + 2;
    const std::size_t key_column = start + 1;

    if (key == "ground") {
      if (ground_) Fail(key_column, "duplicate 'ground' line");
      ParseGround(rest, rest_column);
      return;
    }
    if (!ground_) Fail(key_column, "'ground' must be declared first");

    if (key == "order") {
      SetOnce(order_, ParseChain(rest, rest_column, '<', false), key,
              key_column);
    } else if (key == "pref_a") {
      SetOnce(pref_a_, ParseChain(rest, rest_column, '>', true), key,
              key_column);
    } else if (key == "pref_b") {
      SetOnce(pref_b_, ParseChain(rest, rest_column, '>', true), key,
              key_column);
    } else if (key == "A") {
      a_edges_.push_back(ParseEdge(rest, rest_column));
    } else if (key == "B") {
      b_edges_.push_back(ParseEdge(rest, rest_column));
    } else if (key == "rows") {
      SetOnce(rows_, ParseLabels(rest, rest_column), key, key_column);
      rows_line_ = line_;
    } else if (key == "cols") {
      SetOnce(cols_, ParseLabels(rest, rest_column), key, key_column);
      cols_line_ = line_;
    } else if (key == "M") {
      ParseMatrixRow(rest, rest_column);
    } else {
      Fail(key_column, "unknown directive '" + std::string(key) + "'");
    }
  }

  template <typename T>
  void SetOnce(std::optional<T>& slot, T value, std::string_view key,
               std::size_t column) {
    if (slot) Fail(column, "duplicate '" + std::string(key) + "' line");
    slot = std::move(value);
  }

  void CheckLabel(const Token& tok) {
    if (tok.text.find_first_of(":<>") != std::string_view::npos) {
      Fail(tok.column, "invalid label '" + std::string(tok.text) + "'");
    }
  }

  void ParseGround(std::string_view rest, std::size_t column) {
    const std::vector<Token> words = SplitWords(rest, column);
    if (words.empty()) Fail(column, "empty ground set");
    if (words.size() > kMaxGroundSize) {
      Fail(words[kMaxGroundSize].column, "more than 64 ground elements");
    }
    std::vector<std::string> labels;
    for (const Token& w : words) {
      CheckLabel(w);
      if (std::find(labels.begin(), labels.end(), w.text) != labels.end()) {
        Fail(w.column, "duplicate ground element '" + std::string(w.text) + "'");
      }
      labels.emplace_back(w.text);
    }
    ground_.emplace(std::move(labels));
  }

  Element Lookup(const Token& tok) {
    const auto e = ground_->Find(tok.text);
    if (!e) Fail(tok.column, "unknown element '" + std::string(tok.text) + "'");
    return *e;
  }

  // "x < y < z" (ascending) or "x > y > z" (best first, reversed here).
  LinearOrder ParseChain(std::string_view rest, std::size_t column, char sep,
                         bool descending) {
    std::vector<Element> chain;
    Edge seen;
    std::size_t start = 0;
    for (;;) {
      const std::size_t stop = std::min(rest.find(sep, start), rest.size());
      const std::vector<Token> words =
          SplitWords(rest.substr(start, stop - start), column + start);
      if (words.empty()) Fail(column + start, "missing element");
      if (words.size() > 1) {
        Fail(words[1].column, std::string("expected '") + sep + "'");
      }
      const Element e = Lookup(words[0]);
      if (seen.contains(e)) {
        Fail(words[0].column,
             "duplicate element '" + std::string(words[0].text) + "'");
      }
      seen = seen.With(e);
      chain.push_back(e);
      if (stop == rest.size()) break;
      start = stop + 1;
    }
    if (chain.size() != ground_->size()) {
      for (Element e : ground_->Full() - seen) {
        Fail(column + rest.size(),
             "order misses element '" + ground_->label(e) + "'");
      }
    }
    if (descending) std::reverse(chain.begin(), chain.end());
    return LinearOrder::FromAscending(std::move(chain));
  }

  Edge ParseEdge(std::string_view rest, std::size_t column) {
    const std::vector<Token> words = SplitWords(rest, column);
    if (words.empty()) Fail(column, "empty edge");
    Edge edge;
    for (const Token& w : words) {
      const Element e = Lookup(w);
      if (edge.contains(e)) {
        Fail(w.column, "duplicate element '" + std::string(w.text) + "' in edge");
      }
      edge = edge.With(e);
    }
    return edge;
  }

  std::vector<std::string> ParseLabels(std::string_view rest,
                                       std::size_t column) {
    const std::vector<Token> words = SplitWords(rest, column);
    if (words.empty()) Fail(column, "no strategy labels");
    std::vector<std::string> labels;
    for (const Token& w : words) {
      CheckLabel(w);
      if (std::find(labels.begin(), labels.end(), w.text) != labels.end()) {
        Fail(w.column, "duplicate strategy label '" + std::string(w.text) + "'");
      }
      labels.emplace_back(w.text);
    }
    return labels;
  }

  void ParseMatrixRow(std::string_view rest, std::size_t column) {
    const std::vector<Token> words = SplitWords(rest, column);
    if (words.empty()) Fail(column, "empty matrix row");
    if (!matrix_.empty() && words.size() != matrix_.front().size()) {
      Fail(column, "matrix row has " + std::to_string(words.size()) +
                       " entries, expected " +
                       std::to_string(matrix_.front().size()));
    }
    std::vector<Element> row;
    for (const Token& w : words) row.push_back(Lookup(w));
    matrix_.push_back(std::move(row));
  }

  Instance Finish(std::size_t last_line) {
    line_ = last_line;
    if (!ground_) Fail(1, "missing 'ground' line");
    Instance inst{*ground_};
    inst.order = order_;
    inst.pref_a = pref_a_;
    inst.pref_b = pref_b_;
    if (!a_edges_.empty()) inst.a.emplace(*ground_, a_edges_);
    if (!b_edges_.empty()) inst.b.emplace(*ground_, b_edges_);
    if (!matrix_.empty()) inst.matrix = matrix_;

    auto check_count = [&](const std::optional<std::vector<std::string>>& labels,
                           std::size_t line, std::optional<std::size_t> want,
                           const char* what) {
      if (labels && want && labels->size() != *want) {
        line_ = line;
        Fail(1, std::to_string(labels->size()) + " labels for " +
                    std::to_string(*want) + " " + what);
      }
    };
    const auto count = [](auto n) -> std::optional<std::size_t> {
      if (n == 0) return std::nullopt;
      return n;
    };
    check_count(rows_, rows_line_, count(a_edges_.size()), "edges of A");
    check_count(cols_, cols_line_, count(b_edges_.size()), "edges of B");
    check_count(rows_, rows_line_, count(matrix_.size()), "matrix rows");
    check_count(cols_, cols_line_,
                count(matrix_.empty() ? 0 : matrix_.front().size()),
                "matrix columns");
    inst.rows = rows_;
    inst.cols = cols_;
    return inst;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::optional<GroundSet> ground_;
  std::optional<LinearOrder> order_;
  std::optional<LinearOrder> pref_a_;
  std::optional<LinearOrder> pref_b_;
  std::vector<Edge> a_edges_;
  std::vector<Edge> b_edges_;
  std::optional<std::vector<std::string>> rows_;
  std::optional<std::vector<std::string>> cols_;
  std::size_t rows_line_ = 0;
  std::size_t cols_line_ = 0;
  std::vector<std::vector<Element>> matrix_;
};

void WriteChain(std::ostream& out, const GroundSet& ground,
                const LinearOrder& order, bool descending) {
  std::vector<Element> chain = order.ascending();
  if (descending) std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out << (descending ? " > " : " < ");
    out << ground.label(chain[i]);
  }
  out << '\n';
}

void WriteLabels(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << (i > 0 ? " " : "") << labels[i];
  }
  out << '\n';
}

}  // namespace

Instance ParseInstance(std::string_view text) { return Parser(text).Run(); }

std::string FormatInstance(const Instance& inst) {
  std::ostringstream out;
  out << "ground: ";
  WriteLabels(out, inst.ground.labels());
  if (inst.order) {
    out << "order: ";
    WriteChain(out, inst.ground, *inst.order, false);
  }
  if (inst.a) {
    for (const Edge& e : inst.a->edges()) {
      out << "A: " << FormatEdge(inst.ground, e) << '\n';
    }
  }
  if (inst.b) {
    for (const Edge& e : inst.b->edges()) {
      out << "B: " << FormatEdge(inst.ground, e) << '\n';
    }
  }
  if (inst.pref_a) {
    out << "pref_a: ";
    WriteChain(out, inst.ground, *inst.pref_a, true);
  }
  if (inst.pref_b) {
    out << "pref_b: ";
    WriteChain(out, inst.ground, *inst.pref_b, true);
  }
  if (inst.rows) {
    out << "rows: ";
    WriteLabels(out, *inst.rows);
  }
  if (inst.cols) {
    out << "cols: ";
    WriteLabels(out, *inst.cols);
  }
  if (inst.matrix) {
    for (const auto& row : *inst.matrix) {
      out << "M:";
      for (Element e : row) out << ' ' << inst.ground.label(e);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace lexdual
