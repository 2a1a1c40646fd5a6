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

// Continuous piecewise linear Z^k-periodic functions given by a simplicial
// complex on the fundamental domain [0,1]^k with per-cell affine data.

#ifndef GROUPCERT_PLF_H_
#define GROUPCERT_PLF_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupcert/geometry.h"
#include "groupcert/grid.h"
#include "groupcert/linalg.h"
#include "groupcert/rational.h"

namespace groupcert {

// Unvalidated cell data as read from a document or built by a constructor.
struct RawCell {
  std::vector<RatVector> vertices;
  RatVector gradient;
  Rational offset;
};

struct FunctionDescription {
  size_t k = 0;
  RatVector f;
  std::vector<RawCell> cells;
};

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kNonSimplex, kGapOrOverlap, kDiscontinuity };

  ValidationError(Kind kind, const std::string& message,
                  std::optional<RatVector> witness = std::nullopt)
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::optional<RatVector>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::optional<RatVector> witness_;
};

const char* ToString(ValidationError::Kind kind);

struct AffineCell {
  Simplex simplex;
  RatVector gradient;
  Rational offset;

  Rational ValueAt(const RatVector& x) const {
    return Dot(gradient, x) + offset;
  }
};

class PeriodicPLF {
 public:
  size_t k() const { return k_; }
  // Reduced to [0,1)^k.
  const RatVector& f() const { return f_; }
  const std::vector<AffineCell>& cells() const { return cells_; }
  const std::map<RatVector, Rational>& vertex_values() const {
    return vertex_values_;
  }

  // Value of the periodic extension at any rational point.
  Rational Evaluate(const RatVector& x) const;

  // Index of the lowest-numbered cell containing x (x already in [0,1]^k).
  std::optional<size_t> LocateInDomain(const RatVector& x) const;

  // Least common multiple of the denominators of all vertex coordinates and
  // of f: the smallest q with breakpoints and f on (1/q)Z^k.
  int64_t NaturalDenominator() const;

  FunctionDescription Describe() const;

 private:
  friend PeriodicPLF Validate(const FunctionDescription& candidate);
  size_t k_ = 0;
  RatVector f_;
  std::vector<AffineCell> cells_;
  std::map<RatVector, Rational> vertex_values_;
};

// Checks cell shapes, covering of the fundamental domain, and continuity
// across shared vertices and the periodic identification of opposite facets.
// Cells come back in canonical order: vertices sorted within each cell,
// cells sorted by their vertex lists.
PeriodicPLF Validate(const FunctionDescription& candidate);

// Reduces a vector coordinate-wise into [0,1).
RatVector ReduceModOne(const RatVector& x);

struct SlopeClass {
  RatVector gradient;
  std::vector<size_t> cells;
};

struct SlopePartition {
  std::vector<SlopeClass> classes;
  std::vector<size_t> class_of_cell;

  size_t size() const { return classes.size(); }
  std::vector<RatVector> Gradients() const;
};

// Classes ordered by first appearance in the canonical cell order.
SlopePartition ComputeSlopePartition(const PeriodicPLF& phi);

// max_i ||g^i||_1: a Lipschitz constant with respect to the L-infinity norm.
Rational LipschitzConstant(const PeriodicPLF& phi);

// Per slope class: does some member cell contain a point of Z^k?
std::vector<bool> OriginIncidence(const PeriodicPLF& phi,
                                  const SlopePartition& partition);

FiniteGroupModel RestrictToGrid(const PeriodicPLF& phi, int64_t q);

// All corners of [0,1]^k.
std::vector<RatVector> CubeCorners(size_t k);

}  // namespace groupcert

#endif  // GROUPCERT_PLF_H_
