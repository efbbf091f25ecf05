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

#include "lexdual/oracle.h"

#include <stdexcept>

namespace lexdual {

bool ContainmentOracle::Answer(Edge q) {
  if (!q.FitsIn(ground_.size())) {
    throw std::invalid_argument("query is not over the oracle's ground set");
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return Contains(q);
}

}  // namespace lexdual
