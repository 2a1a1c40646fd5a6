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

// Low-dimensional exact polyhedral primitives: half-spaces, simplices, an
// exact LP for small dimensions, conic spanning tests, segment clipping and
// convex polygon clipping.

#ifndef GROUPCERT_GEOMETRY_H_
#define GROUPCERT_GEOMETRY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "groupcert/linalg.h"
#include "groupcert/rational.h"

namespace groupcert {

// The closed half-space {x : normal . x <= bound}.
struct HalfSpace {
  RatVector normal;
  Rational bound;

  bool Contains(const RatVector& x) const { return Dot(normal, x) <= bound; }
  Rational Slack(const RatVector& x) const { return bound - Dot(normal, x); }
};

// x -> coeffs . x + constant.
struct AffineForm {
  RatVector coeffs;
  Rational constant;

  Rational Evaluate(const RatVector& x) const {
    return Dot(coeffs, x) + constant;
  }
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  RatVector point;

  bool optimal() const { return status == Status::kOptimal; }
};

// Minimizes `objective` over the polyhedron cut out by `constraints` in R^dim.
// Exact dense simplex with Bland's rule; the witness point satisfies every
// constraint exactly.
LpResult AffineMinOverPolytope(const AffineForm& objective,
                               std::span<const HalfSpace> constraints,
                               size_t dim);

// True iff the conic hull of `vectors` is all of R^k, decided by checking that
// each of +-e_1, ..., +-e_k is a nonnegative combination of the vectors.
bool ConeSpans(std::span<const RatVector> vectors);

// True iff `target` is a nonnegative combination of `generators`.
bool InCone(std::span<const RatVector> generators, const RatVector& target);

// For exactly k+1 vectors in R^k: every k-subset has rank k.
bool ProperSubsetsIndependent(std::span<const RatVector> vectors);

// A full-dimensional simplex in R^k with k+1 affinely independent vertices.
class Simplex {
 public:
  // Throws ContractViolation when the vertices do not span a k-simplex.
  explicit Simplex(std::vector<RatVector> vertices);

  size_t dimension() const { return vertices_.size() - 1; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  // One half-space per facet; facet i is opposite vertex i.
  const std::vector<HalfSpace>& facets() const { return facets_; }

  bool Contains(const RatVector& x) const;
  bool ContainsInInterior(const RatVector& x) const;
  RatVector Barycentric(const RatVector& x) const;
  Rational Volume() const;
  RatVector Centroid() const;
  Simplex Translated(const RatVector& shift) const;

  // Axis-aligned bounding box.
  RatVector LowerCorner() const;
  RatVector UpperCorner() const;

 private:
  std::vector<RatVector> vertices_;
  std::vector<HalfSpace> facets_;
  Rational abs_det_;
};

struct ParameterInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const ParameterInterval&,
                         const ParameterInterval&) = default;
};

// The parameters lambda in [0,1] with p + lambda (q - p) in the closed set
// cut out by `facets`; nullopt when empty. A degenerate segment (p == q)
// yields the point interval [0,0] when p lies in the set.
std::optional<ParameterInterval> SegmentClip(const RatVector& p,
                                             const RatVector& q,
                                             std::span<const HalfSpace> facets);
std::optional<ParameterInterval> SegmentSimplexClip(const RatVector& p,
                                                    const RatVector& q,
                                                    const Simplex& s);

// Convex polygon as a cyclic vertex list. Also used for k = 1 where a
// "polygon" is an interval given by its two endpoints.
using Polygon = std::vector<RatVector>;

// Sutherland-Hodgman clip of a convex polygon by one half-space; duplicate
// consecutive vertices are removed.
Polygon ClipPolygon(const Polygon& polygon, const HalfSpace& h);
Polygon ClipPolygon(Polygon polygon, std::span<const HalfSpace> hs);

// Twice the signed area of a planar polygon.
Rational TwiceSignedArea(const Polygon& polygon);

// Drops vertices lying on the segment between their neighbours.
Polygon RemoveCollinear(const Polygon& polygon);

// Fan triangulation of a planar convex polygon with positive area.
std::vector<Simplex> FanTriangulate(const Polygon& polygon);

// Integer vectors w with lo <= w <= hi, in lexicographic order.
std::vector<RatVector> IntegerPointsInBox(const std::vector<int64_t>& lo,
                                          const std::vector<int64_t>& hi);

// Axis box [lo, hi] as half-spaces.
std::vector<HalfSpace> BoxHalfSpaces(const RatVector& lo, const RatVector& hi);

}  // namespace groupcert

#endif  // GROUPCERT_GEOMETRY_H_
