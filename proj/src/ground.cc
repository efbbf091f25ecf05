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

#include "lexdual/ground.h"

#include <stdexcept>
#include <utility>

namespace lexdual {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("ground set is empty");
  }
  if (labels_.size() > kMaxGroundSize) {
    throw std::invalid_argument("ground set has more than 64 elements");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw std::invalid_argument("empty element label");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate ground element '" + labels_[i] +
                                  "'");
    }
  }
}

GroundSet GroundSet::Numbered(std::size_t k, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(Element e) const {
  if (e.index >= labels_.size()) {
    throw std::out_of_range("element index out of range");
  }
  return labels_[e.index];
}

std::optional<Element> GroundSet::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return Element(it->second);
}

std::string FormatEdge(const GroundSet& ground, Edge edge) {
  if (edge.empty()) return "{}";
  std::string out;
  for (Element e : edge) {
    if (!out.empty()) out += ' ';
    out += ground.label(e);
  }
  return out;
}

LinearOrder::LinearOrder(std::vector<Element> ascending)
    : ascending_(std::move(ascending)), rank_(ascending_.size()) {
  for (std::size_t r = 0; r < ascending_.size(); ++r) {
    rank_[ascending_[r].index] = r;
  }
}

LinearOrder LinearOrder::Identity(std::size_t k) {
  if (k == 0 || k > kMaxGroundSize) {
    throw std::invalid_argument("order size must be in 1..64");
  }
  std::vector<Element> ascending;
  ascending.reserve(k);
  for (std::size_t i = 0; i < k; ++i) ascending.emplace_back(i);
  return LinearOrder(std::move(ascending));
}

LinearOrder LinearOrder::FromAscending(std::vector<Element> ascending) {
  const std::size_t k = ascending.size();
  if (k == 0 || k > kMaxGroundSize) {
    throw std::invalid_argument("order size must be in 1..64");
  }
  Edge seen;
  for (Element e : ascending) {
    if (e.index >= k || seen.contains(e)) {
      throw std::invalid_argument("order is not a permutation of the ground set");
    }
    seen = seen.With(e);
  }
  return LinearOrder(std::move(ascending));
}

LinearOrder LinearOrder::Reversed() const {
  return LinearOrder(
      std::vector<Element>(ascending_.rbegin(), ascending_.rend()));
}

Edge LinearOrder::Above(Element e) const {
  Edge above;
  for (std::size_t r = rank(e) + 1; r < size(); ++r) {
    above = above.With(ascending_[r]);
  }
  return above;
}

namespace {

void RequireWithin(const LinearOrder& order, Edge x) {
  if (!x.FitsIn(order.size())) {
    throw std::invalid_argument("edge is not over the order's ground set");
  }
}

}  // namespace

std::strong_ordering LexCompare(const LinearOrder& order, Edge x, Edge y) {
  RequireWithin(order, x);
  RequireWithin(order, y);
  const Edge delta = x ^ y;
  if (delta.empty()) return std::strong_ordering::equal;
  for (Element o : order.ascending()) {
    if (!delta.contains(o)) continue;
    // The set holding the smallest differing element is the smaller one.
    return x.contains(o) ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;  // unreachable: delta is nonempty
}

std::int64_t LexWeight(const LinearOrder& order, Edge x) {
  const std::size_t k = order.size();
  if (k > kMaxWeightGroundSize) {
    throw std::invalid_argument("ground set too large for exact weights");
  }
  RequireWithin(order, x);
  std::int64_t weight = 0;
  for (Element o : x) {
    weight -= std::int64_t{1} << (k - 1 - order.rank(o));
  }
  return weight;
}

Element OrderMax(const LinearOrder& order, Edge x) {
  RequireWithin(order, x);
  if (x.empty()) throw std::invalid_argument("maximum of an empty set");
  Element best = *x.begin();
  for (Element o : x) {
    if (order.Prefers(o, best)) best = o;
  }
  return best;
}

Element OrderMin(const LinearOrder& order, Edge x) {
  RequireWithin(order, x);
  if (x.empty()) throw std::invalid_argument("minimum of an empty set");
  Element worst = *x.begin();
  for (Element o : x) {
    if (order.Prefers(worst, o)) worst = o;
  }
  return worst;
}

}  // namespace lexdual
