// Copyright 2026 The groupcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groupcert/grid.h"

namespace groupcert {

GridIndexer::GridIndexer(int64_t q, size_t k) : q_(q), k_(k), size_(1) {
  if (q < 1 || k < 1) throw ContractViolation("GridIndexer: need q, k >= 1");
  for (size_t c = 0; c < k; ++c) size_ *= static_cast<size_t>(q);
}

std::vector<int64_t> GridIndexer::Coordinates(size_t index) const {
  std::vector<int64_t> coords(k_);
  for (size_t c = k_; c-- > 0;) {
    coords[c] = static_cast<int64_t>(index % static_cast<size_t>(q_));
    index /= static_cast<size_t>(q_);
  }
  return coords;
}

size_t GridIndexer::IndexOf(const std::vector<int64_t>& coords) const {
  size_t index = 0;
  for (size_t c = 0; c < k_; ++c) {
    const int64_t r = ((coords[c] % q_) + q_) % q_;
    index = index * static_cast<size_t>(q_) + static_cast<size_t>(r);
  }
  return index;
}

RatVector GridIndexer::Point(size_t index) const {
  const auto coords = Coordinates(index);
  RatVector p(k_);
  for (size_t c = 0; c < k_; ++c) p[c] = Rational(coords[c], q_);
  return p;
}

size_t GridIndexer::Sum(size_t a, size_t b) const {
  auto ca = Coordinates(a);
  const auto cb = Coordinates(b);
  for (size_t c = 0; c < k_; ++c) ca[c] += cb[c];
  return IndexOf(ca);
}

size_t GridIndexer::Negate(size_t a) const {
  auto ca = Coordinates(a);
  for (auto& x : ca) x = -x;
  return IndexOf(ca);
}

std::optional<std::vector<int64_t>> GridIndexer::Snap(
    const RatVector& x) const {
  if (x.size() != k_) throw ContractViolation("GridIndexer::Snap: dimension");
  std::vector<int64_t> coords(k_);
  for (size_t c = 0; c < k_; ++c) {
    const Rational scaled = x[c] * Rational(q_);
    if (!scaled.is_integer()) return std::nullopt;
    coords[c] = scaled.numerator().get_si();
  }
  return coords;
}

}  // namespace groupcert
