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

#include "groupcert/geometry.h"

#include <algorithm>
#include <utility>

namespace groupcert {
namespace {

// Dense tableau for  min c.y  s.t.  T y = rhs, y >= 0, kept in canonical
// form with respect to `basis`.
class Tableau {
 public:
  Tableau(RatMatrix t, RatVector rhs, std::vector<size_t> basis)
      : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  // Runs the simplex method with Bland's rule on cost vector `cost`, never
  // entering a column marked in `forbidden`. Returns false when unbounded.
  bool Optimize(const RatVector& cost, const std::vector<bool>& forbidden) {
    for (;;) {
      const RatVector reduced = ReducedCosts(cost);
      size_t enter = t_.cols();
      for (size_t j = 0; j < t_.cols(); ++j) {
        if (!forbidden[j] && reduced[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == t_.cols()) return true;
      size_t leave = t_.rows();
      Rational best;
      for (size_t i = 0; i < t_.rows(); ++i) {
        if (t_.at(i, enter).sign() <= 0) continue;
        const Rational ratio = rhs_[i] / t_.at(i, enter);
        if (leave == t_.rows() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.rows()) return false;
      Pivot(leave, enter);
    }
  }

  Rational Objective(const RatVector& cost) const {
    Rational v;
    for (size_t i = 0; i < t_.rows(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  RatVector Values() const {
    RatVector y = Zeros(t_.cols());
    for (size_t i = 0; i < t_.rows(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

  // Pivots basic columns marked in `leaving` out of the basis where possible;
  // rows that cannot be pivoted are redundant and dropped.
  void DriveOut(const std::vector<bool>& leaving) {
    for (size_t i = 0; i < t_.rows();) {
      if (!leaving[basis_[i]]) {
        ++i;
        continue;
      }
      size_t enter = t_.cols();
      for (size_t j = 0; j < t_.cols(); ++j) {
        if (!leaving[j] && !t_.at(i, j).is_zero()) {
          enter = j;
          break;
        }
      }
      if (enter == t_.cols()) {
        DropRow(i);
        continue;
      }
      Pivot(i, enter);
      ++i;
    }
  }

 private:
  RatVector ReducedCosts(const RatVector& cost) const {
    RatVector r = cost;
    for (size_t i = 0; i < t_.rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (size_t j = 0; j < t_.cols(); ++j) {
        if (!t_.at(i, j).is_zero()) r[j] -= cb * t_.at(i, j);
      }
    }
    return r;
  }

  void Pivot(size_t row, size_t col) {
    const Rational inv = Rational(1) / t_.at(row, col);
    for (size_t j = 0; j < t_.cols(); ++j) {
      if (!t_.at(row, j).is_zero()) t_.at(row, j) *= inv;
    }
    rhs_[row] *= inv;
    for (size_t i = 0; i < t_.rows(); ++i) {
      if (i == row || t_.at(i, col).is_zero()) continue;
      const Rational factor = t_.at(i, col);
      for (size_t j = 0; j < t_.cols(); ++j) {
        if (!t_.at(row, j).is_zero()) t_.at(i, j) -= factor * t_.at(row, j);
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  void DropRow(size_t row) {
    RatMatrix next(0, t_.cols());
    RatVector next_rhs;
    std::vector<size_t> next_basis;
    for (size_t i = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      next.AppendRow(t_.Row(i));
      next_rhs.push_back(rhs_[i]);
      next_basis.push_back(basis_[i]);
    }
    t_ = std::move(next);
    rhs_ = std::move(next_rhs);
    basis_ = std::move(next_basis);
  }

  RatMatrix t_;
  RatVector rhs_;
  std::vector<size_t> basis_;
};

}  // namespace

LpResult AffineMinOverPolytope(const AffineForm& objective,
                               std::span<const HalfSpace> constraints,
                               size_t dim) {
  if (objective.coeffs.size() != dim) {
    throw ContractViolation("AffineMinOverPolytope: objective dimension");
  }
  for (const auto& h : constraints) {
    if (h.normal.size() != dim) {
      throw ContractViolation("AffineMinOverPolytope: constraint dimension");
    }
  }
  // Columns: x+ (dim), x- (dim), slacks (m), artificials (one per row with a
  // negative bound).
  const size_t m = constraints.size();
  size_t num_art = 0;
  for (const auto& h : constraints) num_art += h.bound.sign() < 0 ? 1 : 0;
  const size_t slack0 = 2 * dim;
  const size_t art0 = slack0 + m;
  const size_t ncols = art0 + num_art;

  RatMatrix t(m, ncols);
  RatVector rhs = Zeros(m);
  std::vector<size_t> basis(m);
  size_t next_art = art0;
  for (size_t i = 0; i < m; ++i) {
    const HalfSpace& h = constraints[i];
    const bool flip = h.bound.sign() < 0;
    const Rational s = flip ? Rational(-1) : Rational(1);
    for (size_t c = 0; c < dim; ++c) {
      t.at(i, c) = s * h.normal[c];
      t.at(i, dim + c) = -(s * h.normal[c]);
    }
    t.at(i, slack0 + i) = s;
    rhs[i] = s * h.bound;
    if (flip) {
      t.at(i, next_art) = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = slack0 + i;
    }
  }

  Tableau tableau(std::move(t), std::move(rhs), std::move(basis));
  std::vector<bool> is_art(ncols, false);
  for (size_t j = art0; j < ncols; ++j) is_art[j] = true;

  LpResult result;
  if (num_art > 0) {
    RatVector phase1 = Zeros(ncols);
    for (size_t j = art0; j < ncols; ++j) phase1[j] = 1;
    tableau.Optimize(phase1, std::vector<bool>(ncols, false));
    if (tableau.Objective(phase1).sign() > 0) {
      result.status = LpResult::Status::kInfeasible;
      return result;
    }
    tableau.DriveOut(is_art);
  }

  RatVector cost = Zeros(ncols);
  for (size_t c = 0; c < dim; ++c) {
    cost[c] = objective.coeffs[c];
    cost[dim + c] = -objective.coeffs[c];
  }
  if (!tableau.Optimize(cost, is_art)) {
    result.status = LpResult::Status::kUnbounded;
    return result;
  }
  const RatVector y = tableau.Values();
  result.point = Zeros(dim);
  for (size_t c = 0; c < dim; ++c) result.point[c] = y[c] - y[dim + c];
  for (const auto& h : constraints) {
    if (!h.Contains(result.point)) {
      throw std::logic_error("AffineMinOverPolytope: witness infeasible");
    }
  }
  result.status = LpResult::Status::kOptimal;
  result.value = objective.Evaluate(result.point);
  return result;
}

bool InCone(std::span<const RatVector> generators, const RatVector& target) {
  const size_t m = generators.size();
  const size_t k = target.size();
  std::vector<HalfSpace> cons;
  for (size_t i = 0; i < m; ++i) {
    if (generators[i].size() != k) {
      throw ContractViolation("InCone: generator dimension mismatch");
    }
    cons.push_back({Scale(Rational(-1), UnitVector(m, i)), Rational(0)});
  }
  for (size_t c = 0; c < k; ++c) {
    RatVector row = Zeros(m);
    for (size_t i = 0; i < m; ++i) row[i] = generators[i][c];
    cons.push_back({row, target[c]});
    cons.push_back({Scale(Rational(-1), row), -target[c]});
  }
  const AffineForm zero{Zeros(m), Rational(0)};
  return AffineMinOverPolytope(zero, cons, m).optimal();
}

bool ConeSpans(std::span<const RatVector> vectors) {
  if (vectors.empty()) throw ContractViolation("ConeSpans: empty input");
  const size_t k = vectors.front().size();
  if (k == 0) throw ContractViolation("ConeSpans: zero-dimensional input");
  for (const auto& v : vectors) {
    if (v.size() != k) throw ContractViolation("ConeSpans: mixed dimensions");
  }
  for (size_t j = 0; j < k; ++j) {
    const RatVector e = UnitVector(k, j);
    if (!InCone(vectors, e)) return false;
    if (!InCone(vectors, Scale(Rational(-1), e))) return false;
  }
  return true;
}

bool ProperSubsetsIndependent(std::span<const RatVector> vectors) {
  if (vectors.empty()) {
    throw ContractViolation("ProperSubsetsIndependent: empty input");
  }
  const size_t k = vectors.front().size();
  if (vectors.size() != k + 1) {
    throw ContractViolation("ProperSubsetsIndependent: expected " +
                            std::to_string(k + 1) + " vectors, got " +
                            std::to_string(vectors.size()));
  }
  for (size_t skip = 0; skip <= k; ++skip) {
    RatMatrix m(0, k);
    for (size_t i = 0; i <= k; ++i) {
      if (i != skip) m.AppendRow(vectors[i]);
    }
    if (Rank(m) != k) return false;
  }
  return true;
}

Simplex::Simplex(std::vector<RatVector> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ContractViolation("Simplex: no vertices");
  const size_t k = vertices_.front().size();
  if (k == 0 || vertices_.size() != k + 1) {
    throw ContractViolation("Simplex: need k+1 vertices in R^k");
  }
  for (const auto& v : vertices_) {
    if (v.size() != k) throw ContractViolation("Simplex: mixed dimensions");
  }
  // Edge matrix with rows v_i - v_0.
  RatMatrix edges(k, k);
  for (size_t i = 1; i <= k; ++i) {
    for (size_t c = 0; c < k; ++c) {
      edges.at(i - 1, c) = vertices_[i][c] - vertices_[0][c];
    }
  }
  const Rational det = Determinant(edges);
  if (det.is_zero()) {
    throw ContractViolation("Simplex: vertices are affinely dependent");
  }
  abs_det_ = det.Abs();
  // Barycentric coordinate i (i >= 1) is row i-1 of inv(edges^T) applied to
  // x - v_0; obtain those rows by solving edges^T y = e_c column by column.
  RatMatrix edges_t(k, k);
  for (size_t r = 0; r < k; ++r) {
    for (size_t c = 0; c < k; ++c) edges_t.at(r, c) = edges.at(c, r);
  }
  std::vector<RatVector> inv_rows(k, Zeros(k));
  for (size_t c = 0; c < k; ++c) {
    const SolveReport s = RankAndSolve(edges_t, UnitVector(k, c));
    for (size_t r = 0; r < k; ++r) inv_rows[r][c] = s.solution[r];
  }
  facets_.resize(k + 1);
  // lambda_0 = 1 - sum_i lambda_i >= 0.
  RatVector sum = Zeros(k);
  for (const auto& row : inv_rows) sum = Add(sum, row);
  facets_[0] = {sum, Rational(1) + Dot(sum, vertices_[0])};
  for (size_t i = 1; i <= k; ++i) {
    const RatVector n = Scale(Rational(-1), inv_rows[i - 1]);
    facets_[i] = {n, Dot(n, vertices_[0])};
  }
}

bool Simplex::Contains(const RatVector& x) const {
  for (const auto& h : facets_) {
    if (!h.Contains(x)) return false;
  }
  return true;
}

bool Simplex::ContainsInInterior(const RatVector& x) const {
  for (const auto& h : facets_) {
    if (h.Slack(x).sign() <= 0) return false;
  }
  return true;
}

RatVector Simplex::Barycentric(const RatVector& x) const {
  RatVector lambda(vertices_.size());
  Rational rest(1);
  for (size_t i = 1; i < vertices_.size(); ++i) {
    lambda[i] = facets_[i].Slack(x);
    rest -= lambda[i];
  }
  lambda[0] = rest;
  return lambda;
}

Rational Simplex::Volume() const {
  Rational factorial(1);
  for (size_t i = 2; i <= dimension(); ++i) factorial *= Rational(i);
  return abs_det_ / factorial;
}

RatVector Simplex::Centroid() const {
  RatVector c = Zeros(dimension());
  for (const auto& v : vertices_) c = Add(c, v);
  return Scale(Rational(1, vertices_.size()), c);
}

Simplex Simplex::Translated(const RatVector& shift) const {
  std::vector<RatVector> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(Add(v, shift));
  return Simplex(std::move(moved));
}

RatVector Simplex::LowerCorner() const {
  RatVector lo = vertices_.front();
  for (const auto& v : vertices_) {
    for (size_t c = 0; c < lo.size(); ++c) lo[c] = Min(lo[c], v[c]);
  }
  return lo;
}

RatVector Simplex::UpperCorner() const {
  RatVector hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (size_t c = 0; c < hi.size(); ++c) hi[c] = Max(hi[c], v[c]);
  }
  return hi;
}

std::optional<ParameterInterval> SegmentClip(
    const RatVector& p, const RatVector& q,
    std::span<const HalfSpace> facets) {
  const RatVector d = Sub(q, p);
  if (IsZero(d)) {
    for (const auto& h : facets) {
      if (!h.Contains(p)) return std::nullopt;
    }
    return ParameterInterval{Rational(0), Rational(0)};
  }
  Rational lo(0);
  Rational hi(1);
  for (const auto& h : facets) {
    // n.p + lambda n.d <= b
    const Rational slope = Dot(h.normal, d);
    const Rational slack = h.Slack(p);
    if (slope.is_zero()) {
      if (slack.sign() < 0) return std::nullopt;
    } else if (slope.sign() > 0) {
      hi = Min(hi, slack / slope);
    } else {
      lo = Max(lo, slack / slope);
    }
    if (hi < lo) return std::nullopt;
  }
  return ParameterInterval{lo, hi};
}

std::optional<ParameterInterval> SegmentSimplexClip(const RatVector& p,
                                                    const RatVector& q,
                                                    const Simplex& s) {
  if (p.size() != s.dimension() || q.size() != s.dimension()) {
    throw ContractViolation("SegmentSimplexClip: dimension mismatch");
  }
  return SegmentClip(p, q, s.facets());
}

Polygon ClipPolygon(const Polygon& polygon, const HalfSpace& h) {
  Polygon out;
  const size_t n = polygon.size();
  if (n == 0) return out;
  if (n == 1) {
    if (h.Contains(polygon[0])) out.push_back(polygon[0]);
    return out;
  }
  for (size_t i = 0; i < n; ++i) {
    const RatVector& cur = polygon[i];
    const RatVector& next = polygon[(i + 1) % n];
    const Rational sc = h.Slack(cur);
    const Rational sn = h.Slack(next);
    if (sc.sign() >= 0) out.push_back(cur);
    if ((sc.sign() > 0 && sn.sign() < 0) || (sc.sign() < 0 && sn.sign() > 0)) {
      const Rational t = sc / (sc - sn);
      out.push_back(Add(cur, Scale(t, Sub(next, cur))));
    }
  }
  Polygon dedup;
  for (auto& v : out) {
    if (dedup.empty() || dedup.back() != v) dedup.push_back(std::move(v));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Polygon ClipPolygon(Polygon polygon, std::span<const HalfSpace> hs) {
  for (const auto& h : hs) {
    polygon = ClipPolygon(polygon, h);
    if (polygon.empty()) break;
  }
  return polygon;
}

Rational TwiceSignedArea(const Polygon& polygon) {
  Rational a;
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    const RatVector& u = polygon[i];
    const RatVector& v = polygon[(i + 1) % n];
    a += u[0] * v[1] - u[1] * v[0];
  }
  return a;
}

Polygon RemoveCollinear(const Polygon& polygon) {
  Polygon out = polygon;
  bool changed = true;
  while (changed && out.size() > 2) {
    changed = false;
    for (size_t i = 0; i < out.size(); ++i) {
      const RatVector& a = out[(i + out.size() - 1) % out.size()];
      const RatVector& b = out[i];
      const RatVector& c = out[(i + 1) % out.size()];
      const Rational cross =
          (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
      if (cross.is_zero()) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

std::vector<Simplex> FanTriangulate(const Polygon& polygon) {
  const Polygon p = RemoveCollinear(polygon);
  std::vector<Simplex> out;
  if (p.size() < 3) return out;
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    out.emplace_back(std::vector<RatVector>{p[0], p[i], p[i + 1]});
  }
  return out;
}

std::vector<RatVector> IntegerPointsInBox(const std::vector<int64_t>& lo,
                                          const std::vector<int64_t>& hi) {
  std::vector<RatVector> out;
  const size_t k = lo.size();
  for (size_t c = 0; c < k; ++c) {
    if (hi[c] < lo[c]) return out;
  }
  std::vector<int64_t> cur = lo;
  for (;;) {
    RatVector v(k);
    for (size_t c = 0; c < k; ++c) v[c] = Rational(cur[c]);
    out.push_back(std::move(v));
    size_t c = k;
    while (c > 0) {
      --c;
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
      if (c == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<HalfSpace> BoxHalfSpaces(const RatVector& lo, const RatVector& hi) {
  std::vector<HalfSpace> hs;
  const size_t k = lo.size();
  for (size_t c = 0; c < k; ++c) {
    hs.push_back({UnitVector(k, c), hi[c]});
    hs.push_back({Scale(Rational(-1), UnitVector(k, c)), -lo[c]});
  }
  return hs;
}

}  // namespace groupcert
