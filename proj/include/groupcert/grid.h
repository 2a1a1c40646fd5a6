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

// Value tables on the finite group (1/q)Z^k / Z^k.

#ifndef GROUPCERT_GRID_H_
#define GROUPCERT_GRID_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "groupcert/linalg.h"
#include "groupcert/rational.h"

namespace groupcert {

// Indexing of (1/q)Z^k / Z^k: a point with integer coordinates
// (i_1, ..., i_k), 0 <= i_c < q, has linear index sum_c i_c q^(k-1-c).
class GridIndexer {
 public:
  GridIndexer(int64_t q, size_t k);

  int64_t q() const { return q_; }
  size_t k() const { return k_; }
  size_t size() const { return size_; }

  std::vector<int64_t> Coordinates(size_t index) const;
  size_t IndexOf(const std::vector<int64_t>& coords) const;  // reduces mod q
  RatVector Point(size_t index) const;
  size_t Sum(size_t a, size_t b) const;
  size_t Negate(size_t a) const;
  // Grid coordinates of x, or nullopt when x is not on the grid.
  std::optional<std::vector<int64_t>> Snap(const RatVector& x) const;

 private:
  int64_t q_;
  size_t k_;
  size_t size_;
};

struct FiniteGroupModel {
  int64_t q = 1;
  size_t k = 1;
  // Grid coordinates of f; nullopt when f is off the grid.
  std::optional<std::vector<int64_t>> f_index;
  std::vector<Rational> values;

  GridIndexer indexer() const { return GridIndexer(q, k); }
};

}  // namespace groupcert

#endif  // GROUPCERT_GRID_H_
