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

#include "groupcert/linalg.h"

#include <sstream>
#include <utility>

namespace groupcert {
namespace {

void CheckSameSize(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw ContractViolation("vector dimension mismatch: " +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

// Reduces m in place to reduced row echelon form; returns pivot columns.
// Only the first `pivot_cols` columns are eligible as pivots.
std::vector<size_t> ReduceToRref(RatMatrix& m, size_t pivot_cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const Rational inv = Rational(1) / m.at(row, col);
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RatVector> NullspaceFromRref(const RatMatrix& rref,
                                         const std::vector<size_t>& pivots,
                                         size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v = Zeros(n);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rref.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RatVector Zeros(size_t n) { return RatVector(n, Rational(0)); }

RatVector UnitVector(size_t n, size_t i) {
  RatVector v = Zeros(n);
  v.at(i) = 1;
  return v;
}

Rational Dot(const RatVector& a, const RatVector& b) {
  CheckSameSize(a, b);
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector Add(const RatVector& a, const RatVector& b) {
  CheckSameSize(a, b);
  RatVector r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

RatVector Sub(const RatVector& a, const RatVector& b) {
  CheckSameSize(a, b);
  RatVector r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector Scale(const Rational& s, const RatVector& a) {
  RatVector r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool IsZero(const RatVector& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational NormL1(const RatVector& a) {
  Rational s;
  for (const auto& x : a) s += x.Abs();
  return s;
}

Rational NormInf(const RatVector& a) {
  Rational s;
  for (const auto& x : a) s = Max(s, x.Abs());
  return s;
}

std::string ToString(const RatVector& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << ")";
  return os.str();
}

RatMatrix::RatMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::FromRows(std::vector<RatVector> rows) {
  RatMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows.front().size();
  for (const auto& r : rows) m.AppendRow(r);
  return m;
}

RatVector RatMatrix::Row(size_t r) const {
  return RatVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void RatMatrix::AppendRow(const RatVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) {
    throw ContractViolation("RatMatrix: row of length " +
                            std::to_string(row.size()) + " in a matrix with " +
                            std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatVector RatMatrix::Multiply(const RatVector& x) const {
  if (x.size() != cols_) throw ContractViolation("RatMatrix::Multiply: size");
  RatVector y = Zeros(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    }
  }
  return y;
}

SolveReport RankAndSolve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw ContractViolation("RankAndSolve: right-hand side has length " +
                            std::to_string(b.size()) + ", matrix has " +
                            std::to_string(a.rows()) + " rows");
  }
  const size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  const std::vector<size_t> pivots = ReduceToRref(aug, n);

  SolveReport report;
  report.rank = pivots.size();
  for (size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug.at(r, n).is_zero()) {
      report.kind = SolveReport::Kind::kNoSolution;
      return report;
    }
  }
  report.solution = Zeros(n);
  for (size_t i = 0; i < pivots.size(); ++i) {
    report.solution[pivots[i]] = aug.at(i, n);
  }
  if (a.Multiply(report.solution) != b) {
    throw std::logic_error("RankAndSolve: back-substitution check failed");
  }
  if (pivots.size() == n) {
    report.kind = SolveReport::Kind::kUnique;
  } else {
    report.kind = SolveReport::Kind::kUnderdetermined;
    report.nullspace = NullspaceFromRref(aug, pivots, n);
  }
  return report;
}

size_t Rank(const RatMatrix& a) {
  RatMatrix m = a;
  return ReduceToRref(m, m.cols()).size();
}

std::vector<RatVector> Nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = ReduceToRref(m, m.cols());
  return NullspaceFromRref(m, pivots, m.cols());
}

Rational Determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("Determinant: not square");
  RatMatrix m = a;
  const size_t n = m.rows();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && m.at(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (size_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col) / m.at(col, col);
      for (size_t c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

}  // namespace groupcert
