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

#include "groupcert/catalog.h"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace groupcert::catalog {
namespace {

RawCell MakeCell(const Simplex& s, const std::pair<RatVector, Rational>& aff) {
  return RawCell{s.vertices(), aff.first, aff.second};
}

// Andrew's monotone chain; counter-clockwise without collinear points.
Polygon ConvexHull(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const RatVector& o, const RatVector& a, const RatVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  Polygon hull(2 * pts.size());
  size_t h = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]).sign() <= 0) --h;
    hull[h++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = h + 1; i-- > 0;) {
    while (h >= t && cross(hull[h - 2], hull[h - 1], pts[i]).sign() <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

Rational Area(const Polygon& p) { return TwiceSignedArea(p).Abs(); }

// Merges convex polygons with pairwise disjoint interiors whenever their
// union is convex (hull area equals the summed area).
std::vector<Polygon> MergeConvex(std::vector<Polygon> polys) {
  {
    std::vector<RatVector> all;
    Rational total;
    for (const auto& p : polys) {
      all.insert(all.end(), p.begin(), p.end());
      total += Area(p);
    }
    Polygon hull = ConvexHull(all);
    if (Area(hull) == total) return {hull};
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Polygon> merged;
    for (auto& p : polys) {
      bool absorbed = false;
      for (auto& m : merged) {
        std::vector<RatVector> pts = m;
        pts.insert(pts.end(), p.begin(), p.end());
        Polygon hull = ConvexHull(pts);
        if (Area(hull) == Area(m) + Area(p)) {
          m = std::move(hull);
          absorbed = true;
          changed = true;
          break;
        }
      }
      if (!absorbed) merged.push_back(std::move(p));
    }
    polys = std::move(merged);
  }
  return polys;
}

Polygon UnitSquare() {
  return {RatVector{0, 0}, RatVector{1, 0}, RatVector{1, 1}, RatVector{0, 1}};
}

// Uniform integer in [0, n) from the raw engine output.
int64_t Draw(std::mt19937_64& rng, int64_t n) {
  return static_cast<int64_t>(rng() % static_cast<uint64_t>(n));
}

}  // namespace

std::pair<RatVector, Rational> AffineThrough(
    const std::vector<RatVector>& points, const std::vector<Rational>& values) {
  const size_t k = points.front().size();
  RatMatrix m(0, k + 1);
  for (const auto& p : points) {
    RatVector row = p;
    row.push_back(Rational(1));
    m.AppendRow(row);
  }
  const SolveReport s = RankAndSolve(m, values);
  if (s.kind != SolveReport::Kind::kUnique) {
    throw ContractViolation("AffineThrough: points not affinely independent");
  }
  RatVector g(s.solution.begin(), s.solution.begin() + static_cast<long>(k));
  return {g, s.solution[k]};
}

PeriodicPLF FromBreakpoints(const Rational& f,
                            const std::vector<Breakpoint>& table) {
  if (table.size() < 2 || table.front().x != Rational(0) ||
      table.back().x != Rational(1)) {
    throw ContractViolation("FromBreakpoints: table must span [0, 1]");
  }
  FunctionDescription d;
  d.k = 1;
  d.f = {f};
  for (size_t i = 0; i + 1 < table.size(); ++i) {
    const auto& a = table[i];
    const auto& b = table[i + 1];
    if (b.x <= a.x) throw ContractViolation("FromBreakpoints: unsorted table");
    const Rational slope = (b.value - a.value) / (b.x - a.x);
    d.cells.push_back(
        {{RatVector{a.x}, RatVector{b.x}}, {slope}, a.value - slope * a.x});
  }
  return Validate(d);
}

PeriodicPLF FromGridValues2D(const RatVector& f, int64_t q,
                             const std::vector<std::vector<Rational>>& values) {
  FunctionDescription d;
  d.k = 2;
  d.f = f;
  auto value = [&](int64_t i, int64_t j) -> const Rational& {
    return values[static_cast<size_t>(i % q)][static_cast<size_t>(j % q)];
  };
  auto point = [&](int64_t i, int64_t j) {
    return RatVector{Rational(i, q), Rational(j, q)};
  };
  for (int64_t i = 0; i < q; ++i) {
    for (int64_t j = 0; j < q; ++j) {
      const std::vector<std::vector<std::pair<int64_t, int64_t>>> tris = {
          {{i, j}, {i + 1, j}, {i + 1, j + 1}},
          {{i, j}, {i, j + 1}, {i + 1, j + 1}}};
      for (const auto& tri : tris) {
        std::vector<RatVector> pts;
        std::vector<Rational> vals;
        for (auto [a, b] : tri) {
          pts.push_back(point(a, b));
          vals.push_back(value(a, b));
        }
        const auto aff = AffineThrough(pts, vals);
        d.cells.push_back({pts, aff.first, aff.second});
      }
    }
  }
  return Validate(d);
}

PeriodicPLF Gmi(const Rational& f) {
  if (f.sign() <= 0 || f >= Rational(1)) {
    throw ContractViolation("Gmi: f must lie in (0, 1), got " + f.ToString());
  }
  return FromBreakpoints(
      f, {{Rational(0), Rational(0)}, {Rational(1) - f, Rational(1)},
          {Rational(1), Rational(0)}});
}

PeriodicPLF WrongPeak(const Rational& f) {
  if (f.sign() <= 0 || f >= Rational(1)) {
    throw ContractViolation("WrongPeak: f must lie in (0, 1)");
  }
  return FromBreakpoints(f, {{Rational(0), Rational(0)},
                             {f, Rational(1)},
                             {Rational(1), Rational(0)}});
}

PeriodicPLF Spike() {
  return FromBreakpoints(Rational(2, 5), {{Rational(0), Rational(0)},
                                          {Rational(1, 4), Rational(1, 10)},
                                          {Rational(1, 2), Rational(9, 10)},
                                          {Rational(3, 5), Rational(1)},
                                          {Rational(1), Rational(0)}});
}

PeriodicPLF NonExtremeThreeSlope() {
  return FromBreakpoints(Rational(1, 2), {{Rational(0), Rational(0)},
                                          {Rational(1, 6), Rational(5, 12)},
                                          {Rational(1, 3), Rational(7, 12)},
                                          {Rational(1, 2), Rational(1)},
                                          {Rational(1), Rational(0)}});
}

PeriodicPLF ConstantZero(size_t k) {
  if (k == 1) {
    return FromBreakpoints(Rational(0), {{Rational(0), Rational(0)},
                                         {Rational(1), Rational(0)}});
  }
  if (k == 0) throw ContractViolation("ConstantZero: k must be positive");
  // Kuhn triangulation: one simplex 0, e_p0, e_p0 + e_p1, ... per permutation.
  FunctionDescription d;
  d.k = k;
  d.f = Zeros(k);
  std::vector<size_t> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = i;
  do {
    std::vector<RatVector> vertices = {Zeros(k)};
    for (size_t i : perm) {
      RatVector next = vertices.back();
      next[i] = Rational(1);
      vertices.push_back(std::move(next));
    }
    d.cells.push_back({std::move(vertices), Zeros(k), Rational(0)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Validate(d);
}

PeriodicPLF DiagonalLift(const PeriodicPLF& phi1, const RatVector& f_target) {
  if (phi1.k() != 1) throw ContractViolation("DiagonalLift: need k = 1 input");
  if (f_target.size() != 2 ||
      !(f_target[0] + f_target[1] - phi1.f()[0]).is_integer()) {
    throw ContractViolation(
        "DiagonalLift: coordinates of f_target must sum to f mod 1");
  }
  std::vector<Rational> cuts;
  for (const auto& c : phi1.cells()) {
    for (const auto& v : c.simplex.vertices()) {
      cuts.push_back(v[0]);
      cuts.push_back(v[0] + Rational(1));
    }
  }
  cuts.push_back(Rational(2));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  FunctionDescription d;
  d.k = 2;
  d.f = f_target;
  const RatVector diag{1, 1};
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Rational lo = cuts[s];
    const Rational hi = cuts[s + 1];
    const std::vector<HalfSpace> strip = {{diag, hi},
                                          {Scale(Rational(-1), diag), -lo}};
    const Polygon region = ClipPolygon(UnitSquare(), strip);
    const Rational shift = lo < Rational(1) ? Rational(0) : Rational(1);
    const RatVector mid{(lo + hi) / Rational(2) - shift};
    const auto cell = phi1.LocateInDomain(mid);
    const AffineCell& piece = phi1.cells()[*cell];
    const Rational g = piece.gradient[0];
    const std::pair<RatVector, Rational> aff{RatVector{g, g},
                                             piece.offset - g * shift};
    for (const auto& tri : FanTriangulate(region)) {
      d.cells.push_back(MakeCell(tri, aff));
    }
  }
  return Validate(d);
}

PeriodicPLF TriangleLifting(const std::vector<RatVector>& triangle,
                            const RatVector& f) {
  const Simplex body(triangle);
  if (body.dimension() != 2 || !body.ContainsInInterior(f)) {
    throw ContractViolation("TriangleLifting: f must be interior to B");
  }
  // B - f = {r : a_i . r <= 1}.
  std::vector<RatVector> gradients;
  for (const auto& h : body.facets()) {
    gradients.push_back(Scale(Rational(1) / h.Slack(f), h.normal));
  }
  // Shifts w whose copy B - f - w meets the unit square; pi <= 1 means only
  // these can attain the minimum.
  std::vector<RatVector> shifts;
  {
    const RatVector lo = Sub(body.LowerCorner(), f);
    const RatVector hi = Sub(body.UpperCorner(), f);
    std::vector<int64_t> wlo(2), whi(2);
    for (size_t c = 0; c < 2; ++c) {
      wlo[c] = (lo[c] - Rational(1)).Floor().numerator().get_si();
      whi[c] = hi[c].Floor().numerator().get_si() + 1;
    }
    for (const auto& w : IntegerPointsInBox(wlo, whi)) {
      // r + w in B - f for some r in [0,1]^2.
      const RatVector a = Sub(lo, w);
      const RatVector b = Sub(hi, w);
      if (a[0] <= Rational(1) && b[0] >= Rational(0) && a[1] <= Rational(1) &&
          b[1] >= Rational(0)) {
        shifts.push_back(w);
      }
    }
  }
  struct Piece {
    RatVector gradient;
    Rational offset;
  };
  std::vector<Piece> pieces;
  for (const auto& w : shifts) {
    for (const auto& a : gradients) pieces.push_back({a, Dot(a, w)});
  }
  auto pi_at = [&](const RatVector& r) {
    std::optional<Rational> best;
    for (size_t s = 0; s < shifts.size(); ++s) {
      std::optional<Rational> gauge;
      for (size_t i = 0; i < gradients.size(); ++i) {
        const Piece& p = pieces[s * gradients.size() + i];
        const Rational v = Dot(p.gradient, r) + p.offset;
        if (!gauge || v > *gauge) gauge = v;
      }
      if (!best || *gauge < *best) best = gauge;
    }
    return *best;
  };

  // Every line where two pieces with different gradients agree; on each face
  // of the resulting arrangement the pieces are totally ordered.
  std::vector<HalfSpace> lines;
  for (size_t p = 0; p < pieces.size(); ++p) {
    for (size_t q = p + 1; q < pieces.size(); ++q) {
      if (pieces[p].gradient == pieces[q].gradient) continue;
      RatVector n = Sub(pieces[p].gradient, pieces[q].gradient);
      Rational b = pieces[q].offset - pieces[p].offset;
      const Rational lead = n[0].is_zero() ? n[1] : n[0];
      n = Scale(Rational(1) / lead, n);
      b /= lead;
      lines.push_back({n, b});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return std::tie(a.normal, a.bound) < std::tie(b.normal, b.bound);
  });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const HalfSpace& a, const HalfSpace& b) {
                            return a.normal == b.normal && a.bound == b.bound;
                          }),
              lines.end());

  std::vector<Polygon> faces = {UnitSquare()};
  for (const auto& line : lines) {
    std::vector<Polygon> next;
    for (auto& face : faces) {
      bool below = false;
      bool above = false;
      for (const auto& v : face) {
        const int s = line.Slack(v).sign();
        below |= s > 0;
        above |= s < 0;
      }
      if (below && above) {
        next.push_back(ClipPolygon(face, line));
        next.push_back(ClipPolygon(
            face, HalfSpace{Scale(Rational(-1), line.normal), -line.bound}));
      } else {
        next.push_back(std::move(face));
      }
    }
    faces = std::move(next);
  }

  // Group faces by the affine piece attaining pi in their interior.
  std::map<std::pair<RatVector, Rational>, std::vector<Polygon>> groups;
  for (auto& face : faces) {
    face = RemoveCollinear(face);
    RatVector c = Zeros(2);
    for (const auto& v : face) c = Add(c, v);
    c = Scale(Rational(1, static_cast<int64_t>(face.size())), c);
    const Rational value = pi_at(c);
    const Piece* chosen = nullptr;
    for (const auto& p : pieces) {
      if (Dot(p.gradient, c) + p.offset == value) {
        chosen = &p;
        break;
      }
    }
    groups[{chosen->gradient, chosen->offset}].push_back(std::move(face));
  }

  FunctionDescription d;
  d.k = 2;
  d.f = f;
  for (auto& [aff, polys] : groups) {
    for (const auto& cell : MergeConvex(std::move(polys))) {
      for (const auto& tri : FanTriangulate(cell)) {
        d.cells.push_back(MakeCell(tri, aff));
      }
    }
  }
  PeriodicPLF phi = Validate(d);
  for (const auto& [v, value] : phi.vertex_values()) {
    if (value != pi_at(v)) {
      throw std::logic_error("TriangleLifting: vertex value mismatch at " +
                             ToString(v));
    }
  }
  return phi;
}

RatVector TriangleLiftingFixtureF() { return {Rational(2, 3), Rational(2, 3)}; }

PeriodicPLF TriangleLiftingFixture() {
  return TriangleLifting({RatVector{0, 0}, RatVector{2, 0}, RatVector{0, 2}},
                         TriangleLiftingFixtureF());
}

PeriodicPLF RandomPlf(size_t k, int64_t q, uint64_t seed) {
  if (q < 1) throw ContractViolation("RandomPlf: q must be >= 1");
  std::mt19937_64 rng(seed);
  if (k == 1) {
    const Rational f(q > 1 ? 1 + Draw(rng, q - 1) : 0, q);
    std::vector<Breakpoint> table;
    const bool concave = Draw(rng, 2) == 0;
    std::vector<Rational> values(static_cast<size_t>(q) + 1, Rational(0));
    if (concave) {
      // Nonincreasing integer slopes shifted to sum to zero.
      std::vector<int64_t> raw(static_cast<size_t>(q));
      for (auto& s : raw) s = Draw(rng, 2 * q + 1) - q;
      std::sort(raw.rbegin(), raw.rend());
      Rational mean;
      for (auto s : raw) mean += Rational(s);
      mean /= Rational(q);
      for (int64_t i = 0; i < q; ++i) {
        values[static_cast<size_t>(i) + 1] =
            values[static_cast<size_t>(i)] +
            (Rational(raw[static_cast<size_t>(i)]) - mean) / Rational(q * q);
      }
      values[static_cast<size_t>(q)] = 0;
    } else {
      for (int64_t i = 1; i < q; ++i) {
        values[static_cast<size_t>(i)] = Rational(Draw(rng, q + 1), q);
      }
    }
    for (int64_t i = 0; i <= q; ++i) {
      table.push_back({Rational(i, q), values[static_cast<size_t>(i)]});
    }
    return FromBreakpoints(f, table);
  }
  if (k == 2) {
    const RatVector f{Rational(Draw(rng, q), q), Rational(Draw(rng, q), q)};
    std::vector<std::vector<Rational>> values(
        static_cast<size_t>(q), std::vector<Rational>(static_cast<size_t>(q)));
    for (int64_t i = 0; i < q; ++i) {
      for (int64_t j = 0; j < q; ++j) {
        if (i == 0 && j == 0) continue;
        values[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            Rational(Draw(rng, q + 1), q);
      }
    }
    return FromGridValues2D(f, q, values);
  }
  throw ContractViolation("RandomPlf: k must be 1 or 2");
}

}  // namespace groupcert::catalog
