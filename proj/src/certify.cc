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

#include "groupcert/certify.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "groupcert/geometry.h"

namespace groupcert {
namespace {

int64_t FloorToInt(const Rational& x) { return x.Floor().numerator().get_si(); }

int64_t CeilToInt(const Rational& x) { return -FloorToInt(-x); }

struct Piece {
  size_t cell;
  ParameterInterval interval;
};

// A simplicial cone of the local fan at the origin: the tangent cone of one
// cell at one of its lattice-point vertices.
struct FanCone {
  size_t cell;
  size_t cls;
  RatVector apex;
  std::vector<RatVector> generators;
};

std::vector<FanCone> LocalFan(const PeriodicPLF& phi,
                              const SlopePartition& partition) {
  std::vector<FanCone> fan;
  for (size_t c = 0; c < phi.cells().size(); ++c) {
    const auto& vertices = phi.cells()[c].simplex.vertices();
    for (const auto& v : vertices) {
      if (!std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return x.is_integer(); })) {
        continue;
      }
      FanCone cone{c, partition.class_of_cell[c], v, {}};
      for (const auto& u : vertices) {
        if (u != v) cone.generators.push_back(Sub(u, v));
      }
      fan.push_back(std::move(cone));
    }
  }
  return fan;
}

std::string DumpFan(const std::vector<FanCone>& fan) {
  std::ostringstream os;
  os << "local fan at the origin (" << fan.size() << " cones):";
  for (const auto& cone : fan) {
    os << "\n  cell " << cone.cell << " class " << cone.cls << " apex "
       << ToString(cone.apex) << " generators";
    for (const auto& g : cone.generators) os << ' ' << ToString(g);
  }
  return os.str();
}

std::optional<AnchorSet> TryAnchors(const RatVector& f,
                                    const std::vector<RatVector>& lattice) {
  AnchorSet set;
  for (const auto& w : lattice) set.anchors.push_back(Sub(w, f));
  if (!ConeSpans(set.anchors)) return std::nullopt;
  set.lattice_points = lattice;
  return set;
}

}  // namespace

SegmentDecomposition SegmentMu(const PeriodicPLF& phi,
                               const SlopePartition& partition,
                               const RatVector& r) {
  const size_t k = phi.k();
  if (r.size() != k) throw ContractViolation("SegmentMu: dimension mismatch");
  SegmentDecomposition out;
  out.target = r;
  out.masses = Zeros(partition.size());
  out.intervals.resize(partition.size());
  if (IsZero(r)) {
    out.masses[0] = 1;
    out.intervals[0].push_back({0, 0});
    return out;
  }

  // Translates w with [w, w+1]^k meeting the bounding box of the segment.
  std::vector<int64_t> lo(k), hi(k);
  for (size_t c = 0; c < k; ++c) {
    lo[c] = CeilToInt(Min(0, r[c])) - 1;
    hi[c] = FloorToInt(Max(0, r[c]));
  }
  const std::vector<RatVector> shifts = IntegerPointsInBox(lo, hi);
  const RatVector origin = Zeros(k);

  std::vector<Piece> pieces;
  std::set<Rational> cuts{Rational(0), Rational(1)};
  for (size_t c = 0; c < phi.cells().size(); ++c) {
    for (const auto& w : shifts) {
      const Simplex moved = phi.cells()[c].simplex.Translated(w);
      const auto clip = SegmentSimplexClip(origin, r, moved);
      if (!clip || clip->length().is_zero()) continue;
      pieces.push_back({c, *clip});
      cuts.insert(clip->lo);
      cuts.insert(clip->hi);
    }
  }

  const std::vector<Rational> ts(cuts.begin(), cuts.end());
  for (size_t s = 0; s + 1 < ts.size(); ++s) {
    const Rational mid = (ts[s] + ts[s + 1]) / 2;
    const Piece* owner = nullptr;
    for (const auto& p : pieces) {
      if (p.interval.lo <= mid && mid <= p.interval.hi) {
        owner = &p;
        break;
      }
    }
    if (owner == nullptr) {
      throw std::logic_error("SegmentMu: parameter " + mid.ToString() +
                             " is not covered by any cell");
    }
    const size_t cls = partition.class_of_cell[owner->cell];
    out.masses[cls] += ts[s + 1] - ts[s];
    auto& list = out.intervals[cls];
    if (!list.empty() && list.back().hi == ts[s]) {
      list.back().hi = ts[s + 1];
    } else {
      list.push_back({ts[s], ts[s + 1]});
    }
  }
  return out;
}

Rational ReconstructIncrement(const SegmentDecomposition& decomposition,
                              const SlopePartition& partition) {
  Rational total;
  for (size_t i = 0; i < partition.size(); ++i) {
    total += decomposition.masses[i] *
             Dot(partition.classes[i].gradient, decomposition.target);
  }
  return total;
}

bool GenuinelyKDimensional(const SlopePartition& partition) {
  const std::vector<RatVector> gradients = partition.Gradients();
  if (gradients.empty() || gradients.front().empty()) return false;
  return ConeSpans(gradients);
}

bool CheckSlopeHypothesis(const SlopePartition& partition, size_t k) {
  return partition.size() <= k + 1;
}

DirectionSet FindDirections(const PeriodicPLF& phi,
                            const SlopePartition& partition) {
  const size_t k = phi.k();
  const size_t n = partition.size();
  const std::vector<FanCone> fan = LocalFan(phi, partition);
  if (n != k + 1) {
    throw DirectionsNotFound("need " + std::to_string(k + 1) +
                             " slope classes, found " + std::to_string(n) +
                             "\n" + DumpFan(fan));
  }

  std::optional<Rational> min_coord;
  std::set<RatVector> rays;
  for (const auto& cone : fan) {
    for (const auto& g : cone.generators) {
      for (const auto& x : g) {
        if (x.is_zero()) continue;
        if (!min_coord || x.Abs() < *min_coord) min_coord = x.Abs();
      }
      rays.insert(Scale(Rational(1) / NormInf(g), g));
    }
  }
  if (!min_coord) throw DirectionsNotFound("empty local fan");

  DirectionSet out;
  out.epsilon = *min_coord / 2;

  // For every candidate ray, the lowest-index cell of each class whose cone
  // contains it.
  std::vector<std::pair<RatVector, std::map<size_t, size_t>>> incidence;
  for (const auto& d : rays) {
    std::map<size_t, size_t> hits;
    for (const auto& cone : fan) {
      if (hits.count(cone.cls) && hits[cone.cls] <= cone.cell) continue;
      if (InCone(cone.generators, d)) hits[cone.cls] = cone.cell;
    }
    incidence.emplace_back(d, std::move(hits));
  }

  for (size_t i = 0; i < n; ++i) {
    const std::pair<RatVector, std::map<size_t, size_t>>* chosen = nullptr;
    for (int pass = 0; pass < 2 && chosen == nullptr; ++pass) {
      for (const auto& entry : incidence) {
        bool ok = pass == 1 || !entry.second.count(i);
        for (size_t j = 0; j < n && ok; ++j) {
          if (j != i && !entry.second.count(j)) ok = false;
        }
        if (ok) {
          chosen = &entry;
          break;
        }
      }
    }
    if (chosen == nullptr) {
      throw DirectionsNotFound("no ray meets every class other than " +
                               std::to_string(i) + "\n" + DumpFan(fan));
    }
    out.directions.push_back(Scale(out.epsilon, chosen->first));
    std::vector<size_t> cells;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) cells.push_back(chosen->second.at(j));
    }
    out.witness_cells.push_back(std::move(cells));
  }

  if (!ConeSpans(out.directions)) {
    throw DirectionsNotFound("directions do not span\n" + DumpFan(fan));
  }
  if (!ProperSubsetsIndependent(out.directions)) {
    throw DirectionsNotFound("a proper subset of directions is dependent\n" +
                             DumpFan(fan));
  }
  for (size_t i = 0; i < n; ++i) {
    const RatVector& r = out.directions[i];
    const Rational value = phi.Evaluate(r);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational rg = Dot(r, partition.classes[j].gradient);
      if (rg.sign() <= 0 || rg != value) {
        throw DirectionsNotFound("direction " + ToString(r) +
                                 " fails r.g > 0 or value agreement with "
                                 "class " +
                                 std::to_string(j) + "\n" + DumpFan(fan));
      }
    }
  }
  return out;
}

AnchorSet ChooseAnchors(const RatVector& f) {
  const size_t k = f.size();
  if (k == 0) throw ContractViolation("ChooseAnchors: empty f");
  for (const auto& x : f) {
    if (x.sign() < 0 || x >= 1) {
      throw ContractViolation("ChooseAnchors: f must lie in [0,1)^k");
    }
  }
  std::vector<RatVector> units;
  for (size_t c = 0; c < k; ++c) units.push_back(UnitVector(k, c));

  std::vector<RatVector> first = units;
  first.push_back(Zeros(k));
  if (auto set = TryAnchors(f, first)) return *set;
  std::vector<RatVector> second = units;
  second.push_back(Scale(-1, RatVector(k, Rational(1))));
  if (auto set = TryAnchors(f, second)) return *set;

  const std::vector<RatVector> box = IntegerPointsInBox(
      std::vector<int64_t>(k, -2), std::vector<int64_t>(k, 2));
  std::vector<size_t> idx(k + 1);
  for (size_t i = 0; i <= k; ++i) idx[i] = i;
  const size_t m = box.size();
  for (;;) {
    std::vector<RatVector> lattice;
    for (size_t i : idx) lattice.push_back(box[i]);
    if (auto set = TryAnchors(f, lattice)) return *set;
    // Next combination in lexicographic order.
    size_t pos = k + 1;
    while (pos > 0 && idx[pos - 1] == m - (k + 1) + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (size_t i = pos; i <= k; ++i) idx[i] = idx[i - 1] + 1;
  }
  throw std::logic_error("ChooseAnchors: no spanning anchor set in the box");
}

MuMatrix ComputeMu(const PeriodicPLF& phi, const SlopePartition& partition,
                   const AnchorSet& anchors) {
  MuMatrix mu;
  for (const auto& a : anchors.anchors) {
    mu.push_back(SegmentMu(phi, partition, a).masses);
  }
  return mu;
}

SystemReport BuildAndSolveSystem(const std::vector<RatVector>& gradients,
                                 const DirectionSet& directions,
                                 const AnchorSet& anchors, const MuMatrix& mu) {
  const size_t n = gradients.size();
  if (n == 0 || directions.directions.size() != n ||
      anchors.anchors.size() != n || mu.size() != n) {
    throw ContractViolation("BuildAndSolveSystem: need k+1 of everything");
  }
  const size_t k = gradients.front().size();
  SystemReport report;
  report.unknowns = n * k;
  report.reformulated_unknowns = n * k + n;

  RatMatrix a(0, n * k);
  RatMatrix z(0, n * k + n);
  RatVector rhs;
  RatVector z_rhs;
  for (size_t i = 0; i < n; ++i) {
    RatVector row = Zeros(n * k);
    for (size_t j = 0; j < n; ++j) {
      for (size_t c = 0; c < k; ++c) {
        row[j * k + c] = mu[i][j] * anchors.anchors[i][c];
      }
    }
    a.AppendRow(row);
    rhs.push_back(1);
    row.resize(n * k + n);
    z.AppendRow(row);
    z_rhs.push_back(1);
  }
  report.integral_equations = n;
  for (size_t i = 0; i < n; ++i) {
    const RatVector& r = directions.directions[i];
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      RatVector zrow = Zeros(n * k + n);
      for (size_t c = 0; c < k; ++c) zrow[j * k + c] = r[c];
      zrow[n * k + i] = -1;
      z.AppendRow(zrow);
      z_rhs.push_back(0);
      for (size_t l = j + 1; l < n; ++l) {
        if (l == i) continue;
        RatVector row = Zeros(n * k);
        for (size_t c = 0; c < k; ++c) {
          row[j * k + c] = r[c];
          row[l * k + c] = -r[c];
        }
        a.AppendRow(row);
        rhs.push_back(0);
        ++report.direction_equations;
      }
    }
  }

  RatVector own;
  for (const auto& g : gradients) own.insert(own.end(), g.begin(), g.end());
  if (a.Multiply(own) != rhs) {
    throw std::logic_error(
        "BuildAndSolveSystem: the function's gradients violate the system");
  }

  const SolveReport solved = RankAndSolve(a, rhs);
  report.kind = solved.kind;
  report.rank = solved.rank;
  report.nullspace_dimension = solved.nullspace_dimension();
  report.reformulated_rank = Rank(z);
  if (solved.kind == SolveReport::Kind::kUnique) {
    for (size_t j = 0; j < n; ++j) {
      report.solution.emplace_back(solved.solution.begin() + j * k,
                                   solved.solution.begin() + (j + 1) * k);
    }
    report.matches_gradients = report.solution == gradients;
  }
  return report;
}

bool HypothesisReport::origin_incidence_ok() const {
  return std::all_of(origin_incidence.begin(), origin_incidence.end(),
                     [](bool b) { return b; });
}

const char* ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFacetCertified:
      return "facet-certified";
    case Verdict::kGridVerified:
      return "grid-verified";
    case Verdict::kHypothesisFailed:
      return "hypothesis-failed";
    case Verdict::kSystemDegenerate:
      return "system-degenerate";
  }
  return "unknown";
}

Certificate CertifyFacet(const PeriodicPLF& phi) {
  Certificate cert;
  cert.k = phi.k();
  cert.f = phi.f();
  const SlopePartition partition = ComputeSlopePartition(phi);
  cert.gradients = partition.Gradients();

  HypothesisReport& h = cert.hypotheses;
  h.minimality = CheckMinimality(phi);
  h.slope_count = partition.size();
  if (!h.minimality.passed()) {
    cert.failed_stage = "minimality";
    cert.detail = h.minimality.witnesses().front().Describe();
    return cert;
  }
  h.slope_count_ok = CheckSlopeHypothesis(partition, phi.k());
  h.genuinely_k_dimensional = GenuinelyKDimensional(partition);
  h.origin_incidence = OriginIncidence(phi, partition);

  auto fail = [&cert](const std::string& stage, const std::string& detail) {
    if (cert.failed_stage.empty()) {
      cert.failed_stage = stage;
      cert.detail = detail;
    }
  };
  if (!h.slope_count_ok) {
    fail("slope-count", std::to_string(h.slope_count) + " slopes exceed k+1");
  }
  if (!h.genuinely_k_dimensional) {
    fail("genuine-dimensionality", "gradient cone does not span R^k");
  }
  if (!h.origin_incidence_ok()) {
    fail("origin-incidence", "some slope class has no cell at a lattice point");
  }

  try {
    cert.directions = FindDirections(phi, partition);
  } catch (const DirectionsNotFound& e) {
    fail("directions", e.what());
    return cert;
  }
  cert.anchors = ChooseAnchors(phi.f());
  cert.mu = ComputeMu(phi, partition, *cert.anchors);
  cert.system =
      BuildAndSolveSystem(cert.gradients, *cert.directions, *cert.anchors,
                          cert.mu);
  if (!cert.failed_stage.empty()) return cert;

  if (!cert.system->unique() || !cert.system->matches_gradients) {
    cert.verdict = Verdict::kSystemDegenerate;
    cert.failed_stage = "system";
    cert.detail = "nullspace dimension " +
                  std::to_string(cert.system->nullspace_dimension);
    return cert;
  }
  cert.verdict = h.minimality.certified() ? Verdict::kFacetCertified
                                          : Verdict::kGridVerified;
  return cert;
}

}  // namespace groupcert
