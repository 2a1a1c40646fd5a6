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

#include "groupcert/minimality.h"

#include <algorithm>
#include <sstream>

#include "groupcert/parallel.h"

namespace groupcert {
namespace {

// Integer shifts w with (box [lo_a, hi_a]) - w meeting the box [lo_b, hi_b].
std::vector<RatVector> CandidateShifts(const RatVector& lo_a,
                                       const RatVector& hi_a,
                                       const RatVector& lo_b,
                                       const RatVector& hi_b) {
  const size_t k = lo_a.size();
  std::vector<int64_t> lo(k), hi(k);
  for (size_t c = 0; c < k; ++c) {
    // lo_a - w <= hi_b and hi_a - w >= lo_b.
    const Rational min_w = lo_a[c] - hi_b[c];
    const Rational max_w = hi_a[c] - lo_b[c];
    const Rational ceil_min = -((-min_w).Floor());
    lo[c] = ceil_min.numerator().get_si();
    hi[c] = max_w.Floor().numerator().get_si();
  }
  return IntegerPointsInBox(lo, hi);
}

Polygon CyclicVertices(const Simplex& s) {
  // Any ordering of the vertices of an interval or a triangle is cyclic.
  return s.vertices();
}

ViolationWitness SymmetryWitness(const PeriodicPLF& phi, const RatVector& x) {
  ViolationWitness w;
  w.kind = ViolationWitness::Kind::kSymmetry;
  w.points = {x};
  const RatVector mirror = Sub(Scale(Rational(-1), phi.f()), x);
  w.lhs = phi.Evaluate(x) + phi.Evaluate(mirror);
  w.rhs = Rational(1);
  return w;
}

ViolationWitness SubadditivityWitness(const PeriodicPLF& phi,
                                      const RatVector& x, const RatVector& y) {
  ViolationWitness w;
  w.kind = ViolationWitness::Kind::kSubadditivity;
  w.points = {x, y};
  w.lhs = phi.Evaluate(x) + phi.Evaluate(y);
  w.rhs = phi.Evaluate(Add(x, y));
  return w;
}

CheckResult SymmetryOnGrid(const PeriodicPLF& phi, int64_t q) {
  CheckResult result;
  result.mode = CheckMode::kGridVerified;
  const FiniteGroupModel model = RestrictToGrid(phi, q);
  const GridIndexer grid = model.indexer();
  if (!model.f_index) {
    throw ContractViolation("symmetry grid check: f is off the 1/q grid");
  }
  const size_t f_idx = grid.IndexOf(*model.f_index);
  for (size_t x = 0; x < grid.size(); ++x) {
    const size_t mirror = grid.Negate(grid.Sum(f_idx, x));
    if (model.values[x] + model.values[mirror] != Rational(1)) {
      result.witness = SymmetryWitness(phi, grid.Point(x));
      return result;
    }
  }
  return result;
}

}  // namespace

const char* ToString(ViolationWitness::Kind kind) {
  switch (kind) {
    case ViolationWitness::Kind::kOrigin:
      return "origin";
    case ViolationWitness::Kind::kNegativity:
      return "negativity";
    case ViolationWitness::Kind::kSymmetry:
      return "symmetry";
    case ViolationWitness::Kind::kSubadditivity:
      return "subadditivity";
  }
  return "unknown";
}

const char* ToString(CheckMode mode) {
  return mode == CheckMode::kCertified ? "certified" : "grid-verified";
}

bool ViolationWitness::Reproduces(const PeriodicPLF& phi) const {
  switch (kind) {
    case Kind::kOrigin: {
      const Rational v = phi.Evaluate(Zeros(phi.k()));
      return v == lhs && v != Rational(0) && rhs == Rational(0);
    }
    case Kind::kNegativity: {
      if (points.size() != 1) return false;
      const Rational v = phi.Evaluate(points[0]);
      return v == lhs && v.sign() < 0 && rhs == Rational(0);
    }
    case Kind::kSymmetry: {
      if (points.size() != 1) return false;
      const RatVector mirror = Sub(Scale(Rational(-1), phi.f()), points[0]);
      const Rational v = phi.Evaluate(points[0]) + phi.Evaluate(mirror);
      return v == lhs && rhs == Rational(1) && v != Rational(1);
    }
    case Kind::kSubadditivity: {
      if (points.size() != 2) return false;
      const Rational sum = phi.Evaluate(points[0]) + phi.Evaluate(points[1]);
      const Rational joint = phi.Evaluate(Add(points[0], points[1]));
      return sum == lhs && joint == rhs && sum < joint;
    }
  }
  return false;
}

std::string ViolationWitness::Describe() const {
  std::ostringstream os;
  os << ToString(kind) << " violated at";
  for (const auto& p : points) os << " " << ToString(p);
  switch (kind) {
    case Kind::kOrigin:
      os << ": phi(0) = " << lhs;
      break;
    case Kind::kNegativity:
      os << ": phi(x) = " << lhs << " < 0";
      break;
    case Kind::kSymmetry:
      os << ": phi(x) + phi(-f-x) = " << lhs << " != 1";
      break;
    case Kind::kSubadditivity:
      os << ": phi(x) + phi(y) = " << lhs << " < phi(x+y) = " << rhs;
      break;
  }
  return os.str();
}

CheckResult CheckOriginAndNonnegativity(const PeriodicPLF& phi) {
  CheckResult result;
  // Affine pieces attain their minima at vertices; vertex_values is ordered
  // lexicographically, so the first strict minimum is the smallest point.
  const std::pair<const RatVector, Rational>* lowest = nullptr;
  for (const auto& entry : phi.vertex_values()) {
    if (lowest == nullptr || entry.second < lowest->second) lowest = &entry;
  }
  if (lowest != nullptr && lowest->second.sign() < 0) {
    ViolationWitness w;
    w.kind = ViolationWitness::Kind::kNegativity;
    w.points = {ReduceModOne(lowest->first)};
    w.lhs = lowest->second;
    w.rhs = Rational(0);
    result.witness = w;
    return result;
  }
  const Rational at_origin = phi.Evaluate(Zeros(phi.k()));
  if (!at_origin.is_zero()) {
    ViolationWitness w;
    w.kind = ViolationWitness::Kind::kOrigin;
    w.points = {Zeros(phi.k())};
    w.lhs = at_origin;
    w.rhs = Rational(0);
    result.witness = w;
  }
  return result;
}

CheckResult CheckSymmetry(const PeriodicPLF& phi) {
  if (phi.k() >= 3) return SymmetryOnGrid(phi, 2 * phi.NaturalDenominator());

  const auto& cells = phi.cells();
  const RatVector neg_f = Scale(Rational(-1), phi.f());
  // Reflected copies -f - w - Q for every cell Q and relevant shift w.
  struct Mirror {
    size_t cell;
    RatVector shift;
    Simplex simplex;
  };
  std::vector<Mirror> mirrors;
  for (size_t j = 0; j < cells.size(); ++j) {
    std::vector<RatVector> reflected;
    for (const auto& v : cells[j].simplex.vertices()) {
      reflected.push_back(Sub(neg_f, v));
    }
    const Simplex base(reflected);
    // Need base - w to meet [0,1]^k.
    for (const auto& w :
         CandidateShifts(base.LowerCorner(), base.UpperCorner(),
                         Zeros(phi.k()), RatVector(phi.k(), Rational(1)))) {
      mirrors.push_back({j, w, base.Translated(Scale(Rational(-1), w))});
    }
  }

  std::vector<std::optional<RatVector>> worst(cells.size());
  ParallelFor(cells.size(), [&](size_t i) {
    const AffineCell& p = cells[i];
    for (const auto& m : mirrors) {
      const Polygon region =
          ClipPolygon(CyclicVertices(p.simplex), m.simplex.facets());
      for (const auto& x : region) {
        // -f - x = (mirror point in Q) + w, with the mirror point in Q.
        const RatVector in_q = Sub(Sub(neg_f, x), m.shift);
        const Rational s = p.ValueAt(x) + cells[m.cell].ValueAt(in_q);
        if (s != Rational(1)) {
          const RatVector xr = ReduceModOne(x);
          if (!worst[i] || xr < *worst[i]) worst[i] = xr;
        }
      }
    }
  });
  CheckResult result;
  std::optional<RatVector> best;
  for (const auto& w : worst) {
    if (w && (!best || *w < *best)) best = w;
  }
  if (best) result.witness = SymmetryWitness(phi, *best);
  return result;
}

CheckResult CheckSubadditivityOnGrid(const PeriodicPLF& phi, int64_t q) {
  CheckResult result;
  result.mode = CheckMode::kGridVerified;
  const FiniteGroupModel model = RestrictToGrid(phi, q);
  const GridIndexer grid = model.indexer();
  for (size_t x = 0; x < grid.size(); ++x) {
    for (size_t y = 0; y < grid.size(); ++y) {
      const size_t z = grid.Sum(x, y);
      if (model.values[x] + model.values[y] < model.values[z]) {
        result.witness =
            SubadditivityWitness(phi, grid.Point(x), grid.Point(y));
        return result;
      }
    }
  }
  return result;
}

CheckResult CheckSubadditivity(const PeriodicPLF& phi) {
  const size_t k = phi.k();
  if (k >= 3) return CheckSubadditivityOnGrid(phi, 2 * phi.NaturalDenominator());

  const auto& cells = phi.cells();
  const size_t n = cells.size();
  struct Found {
    size_t j = 0;
    size_t l = 0;
    RatVector x;
    RatVector y;
  };
  std::vector<std::optional<Found>> found(n);

  ParallelFor(n, [&](size_t i) {
    const AffineCell& p = cells[i];
    for (size_t j = i; j < n && !found[i]; ++j) {
      const AffineCell& q = cells[j];
      const RatVector sum_lo =
          Add(p.simplex.LowerCorner(), q.simplex.LowerCorner());
      const RatVector sum_hi =
          Add(p.simplex.UpperCorner(), q.simplex.UpperCorner());
      for (size_t l = 0; l < n && !found[i]; ++l) {
        const AffineCell& r = cells[l];
        for (const auto& w : CandidateShifts(sum_lo, sum_hi,
                                             r.simplex.LowerCorner(),
                                             r.simplex.UpperCorner())) {
          // phi_P(x) + phi_Q(y) - phi_R(x + y - w) is affine on P x Q, so its
          // minimum over vertex pairs bounds the constrained minimum below.
          bool maybe_negative = false;
          for (const auto& a : p.simplex.vertices()) {
            for (const auto& b : q.simplex.vertices()) {
              const Rational d =
                  p.ValueAt(a) + q.ValueAt(b) - r.ValueAt(Sub(Add(a, b), w));
              if (d.sign() < 0) maybe_negative = true;
            }
          }
          if (!maybe_negative) continue;

          std::vector<HalfSpace> cons;
          for (const auto& h : p.simplex.facets()) {
            RatVector nrm = h.normal;
            nrm.resize(2 * k, Rational(0));
            cons.push_back({nrm, h.bound});
          }
          for (const auto& h : q.simplex.facets()) {
            RatVector nrm = Zeros(k);
            nrm.insert(nrm.end(), h.normal.begin(), h.normal.end());
            cons.push_back({nrm, h.bound});
          }
          for (const auto& h : r.simplex.facets()) {
            RatVector nrm = h.normal;
            nrm.insert(nrm.end(), h.normal.begin(), h.normal.end());
            cons.push_back({nrm, h.bound + Dot(h.normal, w)});
          }
          AffineForm obj;
          obj.coeffs = Sub(p.gradient, r.gradient);
          const RatVector gy = Sub(q.gradient, r.gradient);
          obj.coeffs.insert(obj.coeffs.end(), gy.begin(), gy.end());
          obj.constant = p.offset + q.offset - r.offset + Dot(r.gradient, w);
          const LpResult lp = AffineMinOverPolytope(obj, cons, 2 * k);
          if (lp.optimal() && lp.value.sign() < 0) {
            RatVector x(lp.point.begin(), lp.point.begin() + static_cast<long>(k));
            RatVector y(lp.point.begin() + static_cast<long>(k), lp.point.end());
            found[i] = Found{j, l, std::move(x), std::move(y)};
            break;
          }
        }
      }
    }
  });

  CheckResult result;
  for (size_t i = 0; i < n; ++i) {
    if (found[i]) {
      result.witness = SubadditivityWitness(phi, found[i]->x, found[i]->y);
      break;
    }
  }
  return result;
}

std::vector<ViolationWitness> MinimalityReport::witnesses() const {
  std::vector<ViolationWitness> out;
  for (const CheckResult* c :
       {&origin_and_nonnegativity, &symmetry, &subadditivity}) {
    if (c->witness) out.push_back(*c->witness);
  }
  return out;
}

MinimalityReport CheckMinimality(const PeriodicPLF& phi) {
  MinimalityReport report;
  report.origin_and_nonnegativity = CheckOriginAndNonnegativity(phi);
  report.symmetry = CheckSymmetry(phi);
  report.subadditivity = CheckSubadditivity(phi);
  return report;
}

std::vector<std::pair<size_t, size_t>> AdditivitySetOnGrid(
    const FiniteGroupModel& model) {
  const GridIndexer grid = model.indexer();
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t x = 0; x < grid.size(); ++x) {
    for (size_t y = 0; y < grid.size(); ++y) {
      if (model.values[x] + model.values[y] == model.values[grid.Sum(x, y)]) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> AdditivitySetOnGrid(
    const PeriodicPLF& phi, int64_t q) {
  return AdditivitySetOnGrid(RestrictToGrid(phi, q));
}

}  // namespace groupcert
