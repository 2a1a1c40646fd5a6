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

// Facet certification for functions with k+1 slopes: hypothesis checks,
// direction discovery in the local fan at the origin, anchor selection, and
// the exact linear system whose unique solution must be the function's own
// gradient set.

#ifndef GROUPCERT_CERTIFY_H_
#define GROUPCERT_CERTIFY_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupcert/linalg.h"
#include "groupcert/minimality.h"
#include "groupcert/plf.h"

namespace groupcert {

// Parameter lengths spent in each slope class along {t r : t in [0, 1]}.
struct SegmentDecomposition {
  RatVector target;
  RatVector masses;
  std::vector<std::vector<ParameterInterval>> intervals;
};

// Boundary parameters go to the lowest-index cell, integer translates being
// enumerated lexicographically. r = 0 yields masses (1, 0, ..., 0).
SegmentDecomposition SegmentMu(const PeriodicPLF& phi,
                               const SlopePartition& partition,
                               const RatVector& r);

// Sum of masses[i] * (g^i . target).
Rational ReconstructIncrement(const SegmentDecomposition& decomposition,
                              const SlopePartition& partition);

bool GenuinelyKDimensional(const SlopePartition& partition);

// At most k+1 slopes.
bool CheckSlopeHypothesis(const SlopePartition& partition, size_t k);

class DirectionsNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// directions[i] lies in closed cells of every class j != i; witness_cells[i]
// lists one such cell per class j != i, in class order.
struct DirectionSet {
  std::vector<RatVector> directions;
  std::vector<std::vector<size_t>> witness_cells;
  Rational epsilon;
};

// Requires k+1 classes. Throws DirectionsNotFound with a dump of the local
// fan when some class has no admissible ray, or when the rays found fail the
// spanning and positivity invariants.
DirectionSet FindDirections(const PeriodicPLF& phi,
                            const SlopePartition& partition);

struct AnchorSet {
  std::vector<RatVector> anchors;
  // anchors[i] + f.
  std::vector<RatVector> lattice_points;
};

AnchorSet ChooseAnchors(const RatVector& f);

struct SystemReport {
  SolveReport::Kind kind = SolveReport::Kind::kNoSolution;
  size_t unknowns = 0;
  size_t integral_equations = 0;
  size_t direction_equations = 0;
  size_t rank = 0;
  size_t nullspace_dimension = 0;
  // Rank of the square form with one auxiliary unknown z_i per direction.
  size_t reformulated_unknowns = 0;
  size_t reformulated_rank = 0;
  // One vector per slope class; empty unless the solution is unique.
  std::vector<RatVector> solution;
  bool matches_gradients = false;

  bool unique() const { return kind == SolveReport::Kind::kUnique; }
};

// mu[i][j]: mass of class j along the segment to anchors[i].
using MuMatrix = std::vector<RatVector>;

MuMatrix ComputeMu(const PeriodicPLF& phi, const SlopePartition& partition,
                   const AnchorSet& anchors);

// Throws std::logic_error when the function's own gradients do not satisfy
// the assembled system.
SystemReport BuildAndSolveSystem(const std::vector<RatVector>& gradients,
                                 const DirectionSet& directions,
                                 const AnchorSet& anchors, const MuMatrix& mu);

struct HypothesisReport {
  MinimalityReport minimality;
  size_t slope_count = 0;
  bool slope_count_ok = false;
  bool genuinely_k_dimensional = false;
  std::vector<bool> origin_incidence;

  bool origin_incidence_ok() const;
};

enum class Verdict {
  kFacetCertified,
  // Every stage passed but minimality was only established on a grid (k >= 3).
  kGridVerified,
  kHypothesisFailed,
  kSystemDegenerate,
};

const char* ToString(Verdict verdict);

struct Certificate {
  Verdict verdict = Verdict::kHypothesisFailed;
  // Empty on success; otherwise one of "minimality", "slope-count",
  // "genuine-dimensionality", "origin-incidence", "directions", "system".
  std::string failed_stage;
  std::string detail;
  size_t k = 0;
  RatVector f;
  std::vector<RatVector> gradients;
  HypothesisReport hypotheses;
  std::optional<DirectionSet> directions;
  std::optional<AnchorSet> anchors;
  MuMatrix mu;
  std::optional<SystemReport> system;
};

Certificate CertifyFacet(const PeriodicPLF& phi);

}  // namespace groupcert

#endif  // GROUPCERT_CERTIFY_H_
