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

// Constructors for fixture functions: certified facets, one representative
// of each hypothesis failure, and seeded random functions for fuzzing.

#ifndef GROUPCERT_CATALOG_H_
#define GROUPCERT_CATALOG_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groupcert/plf.h"

namespace groupcert::catalog {

struct Breakpoint {
  Rational x;
  Rational value;
};

// k = 1 function interpolating the breakpoint table; the table must start at
// x = 0 and end at x = 1 with equal values there.
PeriodicPLF FromBreakpoints(const Rational& f,
                            const std::vector<Breakpoint>& table);

// k = 2 function with the given values on the grid (1/q)Z^2, triangulated by
// splitting each grid square along its main diagonal. values[i][j] is the
// value at (i/q, j/q) for 0 <= i, j < q; periodicity supplies i, j = q.
PeriodicPLF FromGridValues2D(const RatVector& f, int64_t q,
                             const std::vector<std::vector<Rational>>& values);

// The Gomory mixed-integer function: slope 1/(1-f) on [0, 1-f], -1/f on
// [1-f, 1]. Requires 0 < f < 1.
PeriodicPLF Gmi(const Rational& f);

// GMI shape with its peak at f instead of 1 - f.
PeriodicPLF WrongPeak(const Rational& f);

// Breakpoints (0,0), (1/4,1/10), (1/2,9/10), (3/5,1), (1,0) with f = 2/5.
PeriodicPLF Spike();

// theta(x, y) = phi1(x + y) for a k = 1 function phi1. The coordinates of
// f_target must sum to phi1's f modulo 1.
PeriodicPLF DiagonalLift(const PeriodicPLF& phi1, const RatVector& f_target);

// Periodized gauge (trivial lifting) of a lattice-free triangle B with f in
// its interior: pi(r) = min over w in Z^2 of max_i a_i . (r + w), where
// B - f = {r : a_i . r <= 1}.
PeriodicPLF TriangleLifting(const std::vector<RatVector>& triangle,
                            const RatVector& f);

// The frozen k = 2 positive fixture: lifting of conv{(0,0),(2,0),(0,2)}.
PeriodicPLF TriangleLiftingFixture();
RatVector TriangleLiftingFixtureF();

// Minimal but not extreme k = 1 function with three slopes: the average of
// the f = 1/2 tent and a second minimal function with the same f.
PeriodicPLF NonExtremeThreeSlope();

PeriodicPLF ConstantZero(size_t k);

// Random values on the (1/q) grid with phi(0) = 0, canonically triangulated.
// For k = 1 roughly half the seeds produce concave-on-[0,1] (hence
// subadditive) functions. Deterministic per (k, q, seed).
PeriodicPLF RandomPlf(size_t k, int64_t q, uint64_t seed);

// Affine function (gradient, offset) through k+1 points with given values.
std::pair<RatVector, Rational> AffineThrough(
    const std::vector<RatVector>& points, const std::vector<Rational>& values);

}  // namespace groupcert::catalog

#endif  // GROUPCERT_CATALOG_H_
