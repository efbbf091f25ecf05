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

#ifndef LEXDUAL_ORACLE_H_
#define LEXDUAL_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <utility>

#include "lexdual/ground.h"
#include "lexdual/hypergraph.h"

namespace lexdual {

// Black-box containment oracle Q(A, q): does q contain an edge of a hidden
// family A? Subclasses implement Contains(); every query made through
// Answer() or DualAnswer() is counted here, so call budgets can be asserted
// without trusting the algorithm under test.
class ContainmentOracle {
 public:
  explicit ContainmentOracle(GroundSet ground) : ground_(std::move(ground)) {}
  virtual ~ContainmentOracle() = default;

  ContainmentOracle(const ContainmentOracle&) = delete;
  ContainmentOracle& operator=(const ContainmentOracle&) = delete;

  // Throws std::invalid_argument if q is not over the ground set.
  bool Answer(Edge q);

  // Does q contain an edge of the dual family B? By duality this is
  // exactly "O \ q contains no edge of A". Costs one call.
  bool DualAnswer(Edge q) { return !Answer(q.Complement(ground_.size())); }

  const GroundSet& ground() const { return ground_; }
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual bool Contains(Edge q) const = 0;

 private:
  GroundSet ground_;
  std::atomic<std::uint64_t> calls_{0};
};

// Oracle over an explicitly listed family; O(m) subset tests per query.
class ExplicitOracle final : public ContainmentOracle {
 public:
  explicit ExplicitOracle(MultiHypergraph family)
      : ContainmentOracle(family.ground()), family_(std::move(family)) {}

  const MultiHypergraph& family() const { return family_; }

 protected:
  bool Contains(Edge q) const override {
    return family_.ContainsEdgeWithin(q);
  }

 private:
  MultiHypergraph family_;
};

}  // namespace lexdual

#endif  // LEXDUAL_ORACLE_H_
