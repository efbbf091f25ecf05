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

#include "lexdual/lexmax.h"

#include <algorithm>

namespace lexdual {

namespace {

void RequireOrderFits(const GroundSet& ground, const LinearOrder& order) {
  if (order.size() != ground.size()) {
    throw std::invalid_argument("order does not match the ground set");
  }
}

}  // namespace

Edge LexmaxEnumerate(const MultiHypergraph& h, const LinearOrder& order) {
  RequireOrderFits(h.ground(), order);
  if (h.empty()) throw std::invalid_argument("lexmax of an empty family");
  Edge best = h.edge(0);
  for (const Edge& e : h.edges()) {
    if (LexCompare(order, e, best) > 0) best = e;
  }
  return best;
}

LexmaxTrace LexmaxOracle(ContainmentOracle& oracle, const LinearOrder& order,
                         SearchStrategy strategy) {
  RequireOrderFits(oracle.ground(), order);
  const std::size_t k = order.size();

  std::uint64_t step_calls = 0;
  auto ask = [&](Edge q) {
    ++step_calls;
    return oracle.Answer(q);
  };

  if (!ask(Edge::Full(k))) {
    throw std::invalid_argument("oracle rejects the full ground set");
  }

  // suffix[p] holds the elements of rank >= p.
  std::vector<Edge> suffix(k + 1);
  for (std::size_t p = k; p-- > 0;) {
    suffix[p] = suffix[p + 1].With(order.at_rank(p));
  }

  LexmaxTrace trace;
  Edge selected;
  std::size_t decided = 0;
  for (;;) {
    if (decided >= k) {
      throw std::logic_error("oracle answers are not monotone");
    }
    const std::size_t span = k - decided;
    auto accepts = [&](std::size_t t) {
      return ask(selected | suffix[decided + t - 1]);
    };

    // t = 1 repeats the last positive query, so it is not asked again.
    std::size_t t = 1;
    if (strategy == SearchStrategy::kLinear) {
      while (t < span && accepts(t + 1)) ++t;
    } else {
      std::size_t hi = span;
      while (t < hi) {
        const std::size_t mid = t + (hi - t + 1) / 2;
        if (accepts(mid)) {
          t = mid;
        } else {
          hi = mid - 1;
        }
      }
    }

    const Element chosen = order.at_rank(decided + t - 1);
    selected = selected.With(chosen);
    decided += t;
    const bool done = ask(selected);
    trace.steps.push_back({chosen, t, step_calls});
    trace.total_calls += step_calls;
    step_calls = 0;
    if (done) break;
  }
  trace.edge = selected;
  return trace;
}

Edge LexmaxGreedy(ContainmentOracle& oracle, const LinearOrder& order) {
  RequireOrderFits(oracle.ground(), order);
  Edge rest = Edge::Full(order.size());
  for (Element o : order.ascending()) {
    if (oracle.Answer(rest.Without(o))) rest = rest.Without(o);
  }
  return rest;
}

Edge WitnessB0(ContainmentOracle& oracle, const LinearOrder& order, Edge a0,
               Element o0) {
  RequireOrderFits(oracle.ground(), order);
  if (!a0.FitsIn(order.size())) {
    throw std::invalid_argument("edge is not over the oracle's ground set");
  }
  if (!a0.contains(o0)) {
    throw std::invalid_argument("element is not in the lexmax edge");
  }
  const std::size_t k = order.size();
  const Edge start = Edge::Full(k) - (a0.Without(o0) | order.Above(o0));
  if (!oracle.DualAnswer(start)) {
    throw std::invalid_argument(
        "no dual edge fits the witness region; the edge is not lexmax for "
        "this order");
  }
  Edge kept = start;
  for (std::size_t r = k; r-- > 0;) {
    const Element o = order.at_rank(r);
    if (kept.contains(o) && oracle.DualAnswer(kept.Without(o))) {
      kept = kept.Without(o);
    }
  }
  return kept;
}

namespace {

void CheckWithOracle(ContainmentOracle& oracle, const LinearOrder& order,
                     const Theorem1Certificate& cert) {
  if (!oracle.Answer(cert.a0)) {
    throw CertificateError("lexmax edge is not accepted by the oracle");
  }
  for (Element o : cert.a0) {
    if (oracle.Answer(cert.a0.Without(o))) {
      throw CertificateError("lexmax edge is not minimal");
    }
  }
  for (const Theorem1Witness& w : cert.witnesses) {
    if ((cert.a0 & w.b0) != Edge::Singleton(w.o0)) {
      throw CertificateError("witness meets the lexmax edge outside o0");
    }
    if (OrderMax(order, w.b0) != w.o0) {
      throw CertificateError("witness has an element above o0");
    }
    if (!oracle.DualAnswer(w.b0)) {
      throw CertificateError("witness contains no dual edge");
    }
    for (Element o : w.b0) {
      if (oracle.DualAnswer(w.b0.Without(o))) {
        throw CertificateError("witness is not a minimal dual edge");
      }
    }
  }
}

}  // namespace

Theorem1Certificate BuildTheorem1Certificate(ContainmentOracle& oracle,
                                             const LinearOrder& order) {
  Theorem1Certificate cert;
  cert.a0 = LexmaxOracle(oracle, order, SearchStrategy::kDichotomy).edge;
  for (Element o : order.ascending()) {
    if (cert.a0.contains(o)) {
      cert.witnesses.push_back({o, WitnessB0(oracle, order, cert.a0, o)});
    }
  }
  CheckWithOracle(oracle, order, cert);
  return cert;
}

Theorem1Certificate BuildTheorem1Certificate(ContainmentOracle& oracle,
                                             const LinearOrder& order,
                                             const MultiHypergraph& dual) {
  Theorem1Certificate cert = BuildTheorem1Certificate(oracle, order);
  const MultiHypergraph minimal = SpernerReduce(dual);
  for (const Theorem1Witness& w : cert.witnesses) {
    if (std::find(minimal.edges().begin(), minimal.edges().end(), w.b0) ==
        minimal.edges().end()) {
      throw CertificateError("witness is not a minimal edge of the dual");
    }
  }
  return cert;
}

std::optional<std::string> ValidateCertificate(const Theorem1Certificate& cert,
                                               const MultiHypergraph& family,
                                               const MultiHypergraph& dual,
                                               const LinearOrder& order) {
  const auto& edges = family.edges();
  const auto it = std::find(edges.begin(), edges.end(), cert.a0);
  if (it == edges.end()) return "a0 is not an edge of the family";
  if (!IsMinimalEdge(family, static_cast<std::size_t>(it - edges.begin()))) {
    return "a0 is not a minimal edge";
  }
  if (cert.a0 != LexmaxEnumerate(family, order)) return "a0 is not lexmax";
  if (cert.witnesses.size() != cert.a0.size()) {
    return "witness count differs from |a0|";
  }
  const MultiHypergraph minimal_dual = SpernerReduce(dual);
  Edge covered;
  for (const Theorem1Witness& w : cert.witnesses) {
    if (!cert.a0.contains(w.o0) || covered.contains(w.o0)) {
      return "witnesses do not match the elements of a0";
    }
    covered = covered.With(w.o0);
    if ((cert.a0 & w.b0) != Edge::Singleton(w.o0)) {
      return "a0 and b0 do not meet exactly in o0";
    }
    if (w.b0.empty() || OrderMax(order, w.b0) != w.o0) {
      return "o0 is not the maximum of b0";
    }
    if (std::find(minimal_dual.edges().begin(), minimal_dual.edges().end(),
                  w.b0) == minimal_dual.edges().end()) {
      return "b0 is not a minimal edge of the dual";
    }
  }
  return std::nullopt;
}

}  // namespace lexdual
