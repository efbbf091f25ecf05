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

// Line-oriented instance files. `#` starts a comment; every other nonblank
// line is `directive: arguments`:
//
//   ground: o1 o2 o3          element labels, must come first
//   order: o1 < o2 < o3       optional, smallest first (default: as declared)
//   A: o1 o2                  one edge of family A per line, repeatable
//   B: o1                     one edge of family B per line, repeatable
//   pref_a: o2 > o1 > o3      Alice's preference, best first
//   pref_b: o2 > o1 > o3      Bob's preference, best first
//   rows: x1 x2               optional strategy labels for Alice
//   cols: y1 y2               optional strategy labels for Bob
//   M: o1 o2                  one row of an explicit outcome matrix

#ifndef LEXDUAL_INSTANCE_H_
#define LEXDUAL_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexdual/ground.h"
#include "lexdual/hypergraph.h"

namespace lexdual {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct Instance {
  GroundSet ground;
  std::optional<LinearOrder> order = std::nullopt;
  std::optional<MultiHypergraph> a = std::nullopt;
  std::optional<MultiHypergraph> b = std::nullopt;
  std::optional<LinearOrder> pref_a = std::nullopt;
  std::optional<LinearOrder> pref_b = std::nullopt;
  std::optional<std::vector<std::string>> rows = std::nullopt;
  std::optional<std::vector<std::string>> cols = std::nullopt;
  std::optional<std::vector<std::vector<Element>>> matrix = std::nullopt;

  bool operator==(const Instance&) const = default;
};

// Throws ParseError with a 1-based line and column.
Instance ParseInstance(std::string_view text);

// Inverse of ParseInstance: ParseInstance(FormatInstance(x)) == x.
std::string FormatInstance(const Instance& instance);

}  // namespace lexdual

#endif  // LEXDUAL_INSTANCE_H_
