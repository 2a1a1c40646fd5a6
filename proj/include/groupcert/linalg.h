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

// Dense exact linear algebra over the rationals.

#ifndef GROUPCERT_LINALG_H_
#define GROUPCERT_LINALG_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "groupcert/rational.h"

namespace groupcert {

using RatVector = std::vector<Rational>;

// Thrown when an operation is called outside its documented preconditions.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

RatVector Zeros(size_t n);
RatVector UnitVector(size_t n, size_t i);
Rational Dot(const RatVector& a, const RatVector& b);
RatVector Add(const RatVector& a, const RatVector& b);
RatVector Sub(const RatVector& a, const RatVector& b);
RatVector Scale(const Rational& s, const RatVector& a);
bool IsZero(const RatVector& a);
Rational NormL1(const RatVector& a);
Rational NormInf(const RatVector& a);
std::string ToString(const RatVector& a);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols);
  static RatMatrix FromRows(std::vector<RatVector> rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  RatVector Row(size_t r) const;
  void AppendRow(const RatVector& row);

  RatVector Multiply(const RatVector& x) const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct SolveReport {
  enum class Kind { kNoSolution, kUnique, kUnderdetermined };
  Kind kind = Kind::kNoSolution;
  size_t rank = 0;
  // Set for kUnique, and a particular solution for kUnderdetermined.
  RatVector solution;
  // Basis of the homogeneous solution space; empty unless kUnderdetermined.
  std::vector<RatVector> nullspace;

  size_t nullspace_dimension() const { return nullspace.size(); }
};

// Exact Gaussian elimination on [A | b]. When a solution is reported it is
// re-multiplied against A before returning.
SolveReport RankAndSolve(const RatMatrix& a, const RatVector& b);

size_t Rank(const RatMatrix& a);
std::vector<RatVector> Nullspace(const RatMatrix& a);
Rational Determinant(const RatMatrix& a);

}  // namespace groupcert

#endif  // GROUPCERT_LINALG_H_
