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

// Exact checks of the minimality characterization for periodic piecewise
// linear functions: phi(0) = 0, phi >= 0, subadditivity and the symmetry
// condition phi(r) + phi(-f - r) = 1. Periodicity holds by representation.

#ifndef GROUPCERT_MINIMALITY_H_
#define GROUPCERT_MINIMALITY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupcert/plf.h"

namespace groupcert {

struct ViolationWitness {
  enum class Kind { kOrigin, kNegativity, kSymmetry, kSubadditivity };
  Kind kind = Kind::kOrigin;
  // origin/negativity/symmetry: {x}; subadditivity: {x, y}.
  std::vector<RatVector> points;
  // origin: phi(0) vs 0; negativity: phi(x) vs 0;
  // symmetry: phi(x) + phi(-f-x) vs 1; subadditivity: phi(x) + phi(y) vs
  // phi(x+y).
  Rational lhs;
  Rational rhs;

  // Re-evaluates the cited condition on phi; true iff the violation
  // reproduces exactly.
  bool Reproduces(const PeriodicPLF& phi) const;
  std::string Describe() const;
};

const char* ToString(ViolationWitness::Kind kind);

// How a pass verdict was established.
enum class CheckMode { kCertified, kGridVerified };

const char* ToString(CheckMode mode);

struct CheckResult {
  std::optional<ViolationWitness> witness;
  CheckMode mode = CheckMode::kCertified;

  bool passed() const { return !witness.has_value(); }
};

// Negativity is reported before a nonzero origin value.
CheckResult CheckOriginAndNonnegativity(const PeriodicPLF& phi);

// Exact for k in {1, 2}; grid-verified at twice the natural denominator for
// k >= 3. The reported witness is the lexicographically smallest violating x.
CheckResult CheckSymmetry(const PeriodicPLF& phi);

// Exact for k in {1, 2} via one LP per (cell, cell, cell, shift) combination
// that survives a vertex-pair lower bound; grid-verified for k >= 3.
CheckResult CheckSubadditivity(const PeriodicPLF& phi);

// Grid-only subadditivity check over all pairs of (1/q)Z^k / Z^k.
CheckResult CheckSubadditivityOnGrid(const PeriodicPLF& phi, int64_t q);

struct MinimalityReport {
  CheckResult origin_and_nonnegativity;
  CheckResult symmetry;
  CheckResult subadditivity;

  bool passed() const {
    return origin_and_nonnegativity.passed() && symmetry.passed() &&
           subadditivity.passed();
  }
  // True when every clause was decided exactly rather than on a grid.
  bool certified() const {
    return symmetry.mode == CheckMode::kCertified &&
           subadditivity.mode == CheckMode::kCertified;
  }
  std::vector<ViolationWitness> witnesses() const;
};

MinimalityReport CheckMinimality(const PeriodicPLF& phi);

// Ordered pairs (x, y) of grid indices with phi(x) + phi(y) = phi(x + y).
std::vector<std::pair<size_t, size_t>> AdditivitySetOnGrid(
    const PeriodicPLF& phi, int64_t q);
std::vector<std::pair<size_t, size_t>> AdditivitySetOnGrid(
    const FiniteGroupModel& model);

}  // namespace groupcert

#endif  // GROUPCERT_MINIMALITY_H_
