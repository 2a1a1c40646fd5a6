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

// Finite-group evidence for extremality. On the grid (1/q)Z^k / Z^k the tight
// equations of a function (u(0) = 0, symmetry, and every additive pair) form a
// linear system in the grid values; a unique solution means no other minimal
// grid function has a superset of the function's tight pairs.

#ifndef GROUPCERT_ORACLE_H_
#define GROUPCERT_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupcert/grid.h"
#include "groupcert/minimality.h"
#include "groupcert/plf.h"

namespace groupcert {

class GridMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Perturbation {
  // Homogeneous solution, scaled to max |h| = 1.
  std::vector<Rational> direction;
  // Largest 1/2^m (m <= 20) with both plus and minus minimal on the grid;
  // zero when no such step exists.
  Rational epsilon;
  std::vector<Rational> plus;
  std::vector<Rational> minus;
  bool both_minimal = false;
  // h is affine on every cell, so phi +- epsilon h are piecewise linear on
  // the same complex.
  bool extends_to_complex = false;
};

struct OracleReport {
  // kInfeasible: the grid restriction of phi violates its own symmetry
  // equations, which happens only for non-minimal input.
  enum class Verdict { kUnique, kDegenerate, kInfeasible };
  Verdict verdict = Verdict::kUnique;
  int64_t q = 1;
  size_t unknowns = 0;
  size_t equations = 0;
  size_t additive_pairs = 0;
  size_t rank = 0;
  size_t nullspace_dimension = 0;
  std::optional<Perturbation> perturbation;

  bool unique() const { return verdict == Verdict::kUnique; }
};

const char* ToString(OracleReport::Verdict verdict);

// Throws GridMismatch when a vertex or f is off the (1/q) grid.
OracleReport OracleExtremality(const PeriodicPLF& phi, int64_t q);

// Exhaustive check of u(0) = 0, u >= 0, subadditivity over all pairs, then
// symmetry. The subadditivity witness is the most violated pair, lowest
// indices first among ties.
std::optional<ViolationWitness> OracleMinimality(const FiniteGroupModel& model);

// Smallest grid carrying every vertex and f, times each multiplier.
std::vector<int64_t> SelectGridDenominators(const PeriodicPLF& phi,
                                            const std::vector<int64_t>& multiples);

// Checks the two one-directional implications between the exact certifier
// and the oracle at one grid size.
struct ConsistencyReport {
  int64_t q = 1;
  bool exact_minimal = false;
  bool grid_minimal = false;
  bool certified = false;
  bool grid_unique = false;
  std::vector<std::string> defects;

  bool consistent() const { return defects.empty(); }
};

ConsistencyReport CrossCheck(const PeriodicPLF& phi, int64_t q);

}  // namespace groupcert

#endif  // GROUPCERT_ORACLE_H_
