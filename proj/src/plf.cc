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

#include "groupcert/plf.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groupcert {
namespace {

bool InUnitCube(const RatVector& x) {
  for (const auto& c : x) {
    if (c.sign() < 0 || c > Rational(1)) return false;
  }
  return true;
}

// Open-interior overlap test for two simplices: maximize s subject to every
// barycentric coordinate of x in both simplices being at least s.
std::optional<RatVector> InteriorOverlap(const Simplex& a, const Simplex& b) {
  const size_t k = a.dimension();
  for (size_t c = 0; c < k; ++c) {
    if (a.UpperCorner()[c] <= b.LowerCorner()[c] ||
        b.UpperCorner()[c] <= a.LowerCorner()[c]) {
      return std::nullopt;
    }
  }
  std::vector<HalfSpace> cons;
  for (const Simplex* s : {&a, &b}) {
    for (const auto& h : s->facets()) {
      RatVector n = h.normal;
      n.push_back(Rational(1));
      cons.push_back({n, h.bound});
    }
  }
  cons.push_back({UnitVector(k + 1, k), Rational(1)});
  AffineForm objective{Scale(Rational(-1), UnitVector(k + 1, k)), Rational(0)};
  const LpResult lp = AffineMinOverPolytope(objective, cons, k + 1);
  if (!lp.optimal() || lp.value.sign() >= 0) return std::nullopt;
  return RatVector(lp.point.begin(), lp.point.begin() + static_cast<long>(k));
}

std::optional<RatVector> FindUncoveredPoint(const std::vector<AffineCell>& cells,
                                            size_t k) {
  if (k == 1) {
    std::vector<std::pair<Rational, Rational>> spans;
    for (const auto& c : cells) {
      spans.emplace_back(c.simplex.LowerCorner()[0], c.simplex.UpperCorner()[0]);
    }
    std::sort(spans.begin(), spans.end());
    Rational reach(0);
    for (const auto& [lo, hi] : spans) {
      if (lo > reach) return RatVector{(reach + lo) / Rational(2)};
      reach = Max(reach, hi);
    }
    if (reach < Rational(1)) return RatVector{(reach + Rational(1)) / Rational(2)};
    return std::nullopt;
  }
  // Probe cell-centred points of a grid finer than every vertex denominator.
  DenominatorLcm lcm;
  for (const auto& c : cells) {
    for (const auto& v : c.simplex.vertices()) {
      for (const auto& x : v) lcm.Add(x);
    }
  }
  const int64_t n = 4 * lcm.value().get_si();
  if (n <= 0 || n > 256) return std::nullopt;
  std::vector<int64_t> lo(k, 0), hi(k, n - 1);
  for (const auto& idx : IntegerPointsInBox(lo, hi)) {
    RatVector p(k);
    for (size_t c = 0; c < k; ++c) {
      p[c] = (Rational(2) * idx[c] + Rational(1)) / Rational(2 * n);
    }
    bool covered = false;
    for (const auto& c : cells) {
      if (c.simplex.Contains(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) return p;
  }
  return std::nullopt;
}

}  // namespace

const char* ToString(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::kMalformed:
      return "malformed";
    case ValidationError::Kind::kNonSimplex:
      return "non-simplex";
    case ValidationError::Kind::kGapOrOverlap:
      return "gap-or-overlap";
    case ValidationError::Kind::kDiscontinuity:
      return "discontinuity";
  }
  return "unknown";
}

RatVector ReduceModOne(const RatVector& x) {
  RatVector r(x);
  for (auto& c : r) c = c.FractionalPart();
  return r;
}

std::vector<RatVector> CubeCorners(size_t k) {
  return IntegerPointsInBox(std::vector<int64_t>(k, 0),
                            std::vector<int64_t>(k, 1));
}

PeriodicPLF Validate(const FunctionDescription& candidate) {
  using Kind = ValidationError::Kind;
  const size_t k = candidate.k;
  if (k == 0) throw ValidationError(Kind::kMalformed, "dimension k must be >= 1");
  if (candidate.f.size() != k) {
    throw ValidationError(Kind::kMalformed, "f must have k entries");
  }
  if (candidate.cells.empty()) {
    throw ValidationError(Kind::kGapOrOverlap, "no cells");
  }

  std::vector<RawCell> raw = candidate.cells;
  for (size_t i = 0; i < raw.size(); ++i) {
    RawCell& cell = raw[i];
    if (cell.vertices.size() != k + 1) {
      throw ValidationError(Kind::kNonSimplex,
                            "cell " + std::to_string(i) + " has " +
                                std::to_string(cell.vertices.size()) +
                                " vertices, expected " + std::to_string(k + 1));
    }
    if (cell.gradient.size() != k) {
      throw ValidationError(Kind::kMalformed,
                            "cell " + std::to_string(i) +
                                ": gradient must have k entries");
    }
    for (const auto& v : cell.vertices) {
      if (v.size() != k) {
        throw ValidationError(Kind::kMalformed,
                              "cell " + std::to_string(i) +
                                  ": vertex must have k coordinates");
      }
      if (!InUnitCube(v)) {
        throw ValidationError(Kind::kGapOrOverlap,
                              "cell " + std::to_string(i) +
                                  " leaves the fundamental domain [0,1]^k",
                              v);
      }
    }
    std::sort(cell.vertices.begin(), cell.vertices.end());
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawCell& a, const RawCell& b) {
                     return a.vertices < b.vertices;
                   });

  PeriodicPLF phi;
  phi.k_ = k;
  phi.f_ = ReduceModOne(candidate.f);
  for (size_t i = 0; i < raw.size(); ++i) {
    try {
      phi.cells_.push_back(
          {Simplex(raw[i].vertices), raw[i].gradient, raw[i].offset});
    } catch (const ContractViolation&) {
      throw ValidationError(Kind::kNonSimplex,
                            "cell with vertices starting at " +
                                ToString(raw[i].vertices.front()) +
                                " is not a full-dimensional simplex",
                            raw[i].vertices.front());
    }
  }
  const auto& cells = phi.cells_;

  // Covering: pairwise disjoint interiors and total volume one.
  for (size_t i = 0; i < cells.size(); ++i) {
    for (size_t j = i + 1; j < cells.size(); ++j) {
      if (auto w = InteriorOverlap(cells[i].simplex, cells[j].simplex)) {
        throw ValidationError(Kind::kGapOrOverlap,
                              "cells " + std::to_string(i) + " and " +
                                  std::to_string(j) + " overlap at " +
                                  ToString(*w),
                              *w);
      }
    }
  }
  Rational volume;
  for (const auto& c : cells) volume += c.simplex.Volume();
  if (volume != Rational(1)) {
    auto w = FindUncoveredPoint(cells, k);
    std::string msg = "cells cover volume " + volume.ToString() + " of 1";
    if (w) msg += "; uncovered point " + ToString(*w);
    throw ValidationError(Kind::kGapOrOverlap, msg, w);
  }

  // Continuity: every cell vertex, and each periodic copy of it inside the
  // fundamental domain, gets one value from every cell containing it.
  std::vector<int64_t> lo(k, -1), hi(k, 1);
  const std::vector<RatVector> shifts = IntegerPointsInBox(lo, hi);
  for (size_t i = 0; i < cells.size(); ++i) {
    for (const auto& v : cells[i].simplex.vertices()) {
      const Rational value = cells[i].ValueAt(v);
      for (const auto& t : shifts) {
        const RatVector u = Add(v, t);
        if (!InUnitCube(u)) continue;
        for (size_t j = 0; j < cells.size(); ++j) {
          if (!cells[j].simplex.Contains(u)) continue;
          const Rational other = cells[j].ValueAt(u);
          if (other != value) {
            std::ostringstream os;
            os << "discontinuity at " << ToString(u) << ": cell " << j
               << " gives " << other << ", cell " << i << " gives " << value
               << " at " << ToString(v);
            throw ValidationError(Kind::kDiscontinuity, os.str(), u);
          }
        }
      }
      phi.vertex_values_[v] = value;
    }
  }
  return phi;
}

std::optional<size_t> PeriodicPLF::LocateInDomain(const RatVector& x) const {
  for (size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].simplex.Contains(x)) return i;
  }
  return std::nullopt;
}

Rational PeriodicPLF::Evaluate(const RatVector& x) const {
  if (x.size() != k_) throw ContractViolation("Evaluate: dimension mismatch");
  const RatVector y = ReduceModOne(x);
  const auto cell = LocateInDomain(y);
  if (!cell) throw std::logic_error("Evaluate: point not covered");
  return cells_[*cell].ValueAt(y);
}

int64_t PeriodicPLF::NaturalDenominator() const {
  DenominatorLcm lcm;
  for (const auto& c : cells_) {
    for (const auto& v : c.simplex.vertices()) {
      for (const auto& x : v) lcm.Add(x);
    }
  }
  for (const auto& x : f_) lcm.Add(x);
  return lcm.value().get_si();
}

FunctionDescription PeriodicPLF::Describe() const {
  FunctionDescription d;
  d.k = k_;
  d.f = f_;
  for (const auto& c : cells_) {
    d.cells.push_back({c.simplex.vertices(), c.gradient, c.offset});
  }
  return d;
}

std::vector<RatVector> SlopePartition::Gradients() const {
  std::vector<RatVector> g;
  for (const auto& c : classes) g.push_back(c.gradient);
  return g;
}

SlopePartition ComputeSlopePartition(const PeriodicPLF& phi) {
  SlopePartition p;
  std::map<RatVector, size_t> index;
  for (size_t i = 0; i < phi.cells().size(); ++i) {
    const RatVector& g = phi.cells()[i].gradient;
    auto [it, inserted] = index.emplace(g, p.classes.size());
    if (inserted) p.classes.push_back({g, {}});
    p.classes[it->second].cells.push_back(i);
    p.class_of_cell.push_back(it->second);
  }
  return p;
}

Rational LipschitzConstant(const PeriodicPLF& phi) {
  Rational best;
  for (const auto& c : phi.cells()) best = Max(best, NormL1(c.gradient));
  return best;
}

std::vector<bool> OriginIncidence(const PeriodicPLF& phi,
                                  const SlopePartition& partition) {
  const std::vector<RatVector> corners = CubeCorners(phi.k());
  std::vector<bool> out;
  for (const auto& cls : partition.classes) {
    bool hit = false;
    for (size_t cell : cls.cells) {
      for (const auto& z : corners) {
        if (phi.cells()[cell].simplex.Contains(z)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    out.push_back(hit);
  }
  return out;
}

FiniteGroupModel RestrictToGrid(const PeriodicPLF& phi, int64_t q) {
  if (q < 1) throw ContractViolation("RestrictToGrid: q must be >= 1");
  FiniteGroupModel model;
  model.q = q;
  model.k = phi.k();
  const GridIndexer grid(q, phi.k());
  model.f_index = grid.Snap(phi.f());
  model.values.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    model.values.push_back(phi.Evaluate(grid.Point(i)));
  }
  return model;
}

}  // namespace groupcert
