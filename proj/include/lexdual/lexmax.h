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

#ifndef LEXDUAL_LEXMAX_H_
#define LEXDUAL_LEXMAX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexdual/ground.h"
#include "lexdual/hypergraph.h"
#include "lexdual/oracle.h"

namespace lexdual {

// Raised when a freshly built certificate fails its own checks. With a
// consistent (monotone, dual-respecting) oracle this cannot happen.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lexmax edge of an explicit family by direct comparison. All maximizers are
// equal as sets, so the result does not depend on which copy wins.
// Throws std::invalid_argument for an empty family or an order of the wrong
// size.
Edge LexmaxEnumerate(const MultiHypergraph& h, const LinearOrder& order);

enum class SearchStrategy { kLinear, kDichotomy };

struct LexmaxStep {
  Element element;      // element added to the edge in this step
  std::size_t t = 0;    // 1-based offset of `element` past the decided prefix
  std::uint64_t calls = 0;
};

struct LexmaxTrace {
  Edge edge;
  std::vector<LexmaxStep> steps;  // ascending under the order
  std::uint64_t total_calls = 0;  // sum of steps[i].calls
};

// Stepwise oracle search for the lexmax edge.
//
// Elements are visited in ascending order. Each step keeps the elements
// chosen so far, S, and the number of elements already decided, p. Among
// the sets S ∪ {o_{p+t}, ..., o_k} it finds the largest t the oracle still
// accepts (t = 1 is always accepted), adds o_{p+t} to S and advances p by t.
// The run stops as soon as S itself is accepted; S is then the lexmax edge.
// Answers are monotone in t, so kDichotomy binary-searches each step.
//
// Call budget: kLinear <= k(k+1)/2 + |A⁰| + 1, kDichotomy <=
// |A⁰|(ceil(log2 k) + 2) + |A⁰| + 1. The first step is charged with the
// initial query on the full ground set.
//
// Throws std::invalid_argument if the oracle rejects the full ground set,
// and std::logic_error if the oracle answers inconsistently.
LexmaxTrace LexmaxOracle(ContainmentOracle& oracle, const LinearOrder& order,
                         SearchStrategy strategy);

// Single pass, exactly k calls: scanning ascending, drop each element whose
// removal still leaves an edge. Assumes the family is nonempty.
Edge LexmaxGreedy(ContainmentOracle& oracle, const LinearOrder& order);

// An edge B⁰ of the dual family with a0 ∩ B⁰ = {o0} and every element of B⁰
// at most o0. Starts from O \ ((a0 \ {o0}) ∪ {o : o ≻ o0}) and greedily drops
// elements in descending order while a dual edge survives, so B⁰ is a minimal
// dual edge.
//
// Throws std::invalid_argument if o0 is not in a0, or if the starting set
// holds no dual edge (a0 was not the lexmax edge for this order).
Edge WitnessB0(ContainmentOracle& oracle, const LinearOrder& order, Edge a0,
               Element o0);

struct Theorem1Witness {
  Element o0;
  Edge b0;
};

struct Theorem1Certificate {
  Edge a0;
  std::vector<Theorem1Witness> witnesses;  // one per element of a0, ascending
};

// Lexmax edge plus a witness for each of its elements, checked through the
// oracle: a0 is a minimal edge, and each b0 is a minimal dual edge meeting
// a0 only in o0 with o0 as its maximum. The overload taking `dual` also
// checks each b0 against the explicit dual family. Throws CertificateError
// when a check fails.
Theorem1Certificate BuildTheorem1Certificate(ContainmentOracle& oracle,
                                             const LinearOrder& order);
Theorem1Certificate BuildTheorem1Certificate(ContainmentOracle& oracle,
                                             const LinearOrder& order,
                                             const MultiHypergraph& dual);

// Oracle-free check of a certificate against explicit families. Returns a
// description of the first problem found, or nullopt if it is valid.
std::optional<std::string> ValidateCertificate(const Theorem1Certificate& cert,
                                               const MultiHypergraph& family,
                                               const MultiHypergraph& dual,
                                               const LinearOrder& order);

}  // namespace lexdual

#endif  // LEXDUAL_LEXMAX_H_
