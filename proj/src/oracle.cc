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

#include "groupcert/oracle.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "groupcert/certify.h"
#include "groupcert/parallel.h"

namespace groupcert {
namespace {

// Equations have small integer coefficients, so ranks mod a large prime are
// lower bounds for ranks over Q.
constexpr uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t MulMod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

uint64_t PowMod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a);
    a = MulMod(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t ToMod(int64_t v) {
  const int64_t m = v % static_cast<int64_t>(kPrime);
  return m < 0 ? static_cast<uint64_t>(m + static_cast<int64_t>(kPrime))
               : static_cast<uint64_t>(m);
}

struct Equation {
  std::vector<std::pair<size_t, int64_t>> terms;
  int64_t rhs = 0;
};

Equation MakeEquation(const std::map<size_t, int64_t>& coeffs, int64_t rhs) {
  Equation e;
  for (const auto& [i, c] : coeffs) {
    if (c != 0) e.terms.emplace_back(i, c);
  }
  e.rhs = rhs;
  return e;
}

bool Satisfies(const Equation& e, const std::vector<Rational>& u) {
  Rational lhs;
  for (const auto& [i, c] : e.terms) lhs += Rational(c) * u[i];
  return lhs == Rational(e.rhs);
}

bool Annihilates(const Equation& e, const RatVector& h) {
  Rational lhs;
  for (const auto& [i, c] : e.terms) lhs += Rational(c) * h[i];
  return lhs.is_zero();
}

// Incremental row echelon form mod p with unit pivots.
class ModularEchelon {
 public:
  explicit ModularEchelon(size_t n) : rows_(n) {}

  size_t rank() const { return rank_; }

  bool Insert(const Equation& e) {
    std::vector<uint64_t> row(rows_.size(), 0);
    for (const auto& [i, c] : e.terms) row[i] = (row[i] + ToMod(c)) % kPrime;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 0) continue;
      if (rows_[c].empty()) {
        const uint64_t inv = PowMod(row[c], kPrime - 2);
        for (size_t d = c; d < row.size(); ++d) row[d] = MulMod(row[d], inv);
        rows_[c] = std::move(row);
        ++rank_;
        return true;
      }
      const uint64_t factor = row[c];
      const auto& pivot = rows_[c];
      for (size_t d = c; d < row.size(); ++d) {
        if (pivot[d] == 0) continue;
        row[d] = (row[d] + kPrime - MulMod(factor, pivot[d])) % kPrime;
      }
    }
    return false;
  }

 private:
  std::vector<std::vector<uint64_t>> rows_;
  size_t rank_ = 0;
};

std::vector<RatVector> ExactNullspace(const std::vector<Equation>& equations,
                                      std::vector<size_t> selected, size_t n) {
  for (;;) {
    RatMatrix a(0, n);
    for (size_t idx : selected) {
      RatVector row = Zeros(n);
      for (const auto& [i, c] : equations[idx].terms) row[i] += Rational(c);
      a.AppendRow(row);
    }
    std::vector<RatVector> basis =
        selected.empty() ? std::vector<RatVector>{} : Nullspace(a);
    if (selected.empty()) {
      for (size_t i = 0; i < n; ++i) basis.push_back(UnitVector(n, i));
    }
    // The true nullspace is contained in this one; it is equal once every
    // equation annihilates the basis.
    std::vector<size_t> missing;
    for (size_t idx = 0; idx < equations.size(); ++idx) {
      for (const auto& h : basis) {
        if (!Annihilates(equations[idx], h)) {
          missing.push_back(idx);
          break;
        }
      }
    }
    if (missing.empty()) return basis;
    selected.insert(selected.end(), missing.begin(), missing.end());
  }
}

void CheckGrid(const PeriodicPLF& phi, const GridIndexer& grid) {
  if (!grid.Snap(phi.f())) {
    throw GridMismatch("f = " + ToString(phi.f()) + " is off the 1/" +
                       std::to_string(grid.q()) + " grid");
  }
  for (const auto& cell : phi.cells()) {
    for (const auto& v : cell.simplex.vertices()) {
      if (!grid.Snap(v)) {
        throw GridMismatch("vertex " + ToString(v) + " is off the 1/" +
                           std::to_string(grid.q()) + " grid");
      }
    }
  }
}

bool AffineOnCells(const PeriodicPLF& phi, const GridIndexer& grid,
                   const std::vector<Rational>& h) {
  const size_t k = phi.k();
  for (const auto& cell : phi.cells()) {
    const auto& s = cell.simplex;
    std::vector<Rational> at_vertices;
    for (const auto& v : s.vertices()) {
      at_vertices.push_back(h[grid.IndexOf(*grid.Snap(v))]);
    }
    std::vector<int64_t> lo(k), hi(k);
    const RatVector lower = s.LowerCorner();
    const RatVector upper = s.UpperCorner();
    for (size_t c = 0; c < k; ++c) {
      lo[c] = (lower[c] * grid.q()).Floor().numerator().get_si();
      hi[c] = (upper[c] * grid.q()).Floor().numerator().get_si();
    }
    for (const auto& p : IntegerPointsInBox(lo, hi)) {
      const RatVector x = Scale(Rational(1, grid.q()), p);
      if (!s.Contains(x)) continue;
      const RatVector lambda = s.Barycentric(x);
      Rational interpolated;
      for (size_t i = 0; i < lambda.size(); ++i) {
        interpolated += lambda[i] * at_vertices[i];
      }
      if (interpolated != h[grid.IndexOf(*grid.Snap(x))]) return false;
    }
  }
  return true;
}

Perturbation ExhibitPerturbation(const PeriodicPLF& phi,
                                 const FiniteGroupModel& model,
                                 const RatVector& null_vector) {
  Perturbation out;
  Rational scale;
  for (const auto& x : null_vector) scale = Max(scale, x.Abs());
  out.direction = Scale(Rational(1) / scale, null_vector);
  out.epsilon = 0;
  Rational eps(1);
  for (int m = 0; m <= 20; ++m, eps = eps / 2) {
    FiniteGroupModel plus = model;
    FiniteGroupModel minus = model;
    for (size_t i = 0; i < model.values.size(); ++i) {
      plus.values[i] += eps * out.direction[i];
      minus.values[i] -= eps * out.direction[i];
    }
    if (!OracleMinimality(plus) && !OracleMinimality(minus)) {
      out.epsilon = eps;
      out.plus = std::move(plus.values);
      out.minus = std::move(minus.values);
      out.both_minimal = true;
      break;
    }
  }
  out.extends_to_complex = AffineOnCells(phi, model.indexer(), out.direction);
  return out;
}

}  // namespace

const char* ToString(OracleReport::Verdict verdict) {
  switch (verdict) {
    case OracleReport::Verdict::kUnique:
      return "unique";
    case OracleReport::Verdict::kDegenerate:
      return "degenerate";
    case OracleReport::Verdict::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

OracleReport OracleExtremality(const PeriodicPLF& phi, int64_t q) {
  if (q < 1) throw ContractViolation("OracleExtremality: q must be >= 1");
  const GridIndexer grid(q, phi.k());
  CheckGrid(phi, grid);
  const FiniteGroupModel model = RestrictToGrid(phi, q);
  const size_t n = grid.size();
  const std::vector<int64_t>& fc = *model.f_index;

  std::vector<Equation> equations;
  equations.push_back(MakeEquation({{0, 1}}, 0));
  for (size_t x = 0; x < n; ++x) {
    std::vector<int64_t> c = grid.Coordinates(x);
    for (size_t d = 0; d < c.size(); ++d) c[d] = -fc[d] - c[d];
    std::map<size_t, int64_t> coeffs{{x, 1}};
    coeffs[grid.IndexOf(c)] += 1;
    equations.push_back(MakeEquation(coeffs, 1));
  }
  const auto pairs = AdditivitySetOnGrid(model);
  for (const auto& [x, y] : pairs) {
    if (x > y) continue;
    std::map<size_t, int64_t> coeffs;
    coeffs[x] += 1;
    coeffs[y] += 1;
    coeffs[grid.Sum(x, y)] -= 1;
    equations.push_back(MakeEquation(coeffs, 0));
  }

  OracleReport report;
  report.q = q;
  report.unknowns = n;
  report.equations = equations.size();
  report.additive_pairs = pairs.size();

  for (const auto& e : equations) {
    if (!Satisfies(e, model.values)) {
      report.verdict = OracleReport::Verdict::kInfeasible;
      return report;
    }
  }

  ModularEchelon echelon(n);
  std::vector<size_t> selected;
  for (size_t i = 0; i < equations.size() && echelon.rank() < n; ++i) {
    if (echelon.Insert(equations[i])) selected.push_back(i);
  }
  if (echelon.rank() == n) {
    report.verdict = OracleReport::Verdict::kUnique;
    report.rank = n;
    return report;
  }

  const std::vector<RatVector> basis = ExactNullspace(equations, selected, n);
  report.nullspace_dimension = basis.size();
  report.rank = n - basis.size();
  if (basis.empty()) {
    report.verdict = OracleReport::Verdict::kUnique;
    return report;
  }
  report.verdict = OracleReport::Verdict::kDegenerate;
  report.perturbation = ExhibitPerturbation(phi, model, basis.front());
  return report;
}

std::optional<ViolationWitness> OracleMinimality(const FiniteGroupModel& model) {
  const GridIndexer grid = model.indexer();
  const size_t n = grid.size();
  const auto& u = model.values;
  if (u.size() != n) throw ContractViolation("OracleMinimality: table size");

  if (!u[0].is_zero()) {
    return ViolationWitness{ViolationWitness::Kind::kOrigin,
                            {grid.Point(0)}, u[0], Rational(0)};
  }
  for (size_t x = 0; x < n; ++x) {
    if (u[x].sign() < 0) {
      return ViolationWitness{ViolationWitness::Kind::kNegativity,
                              {grid.Point(x)}, u[x], Rational(0)};
    }
  }

  struct Worst {
    size_t y = 0;
    Rational delta;
    bool found = false;
  };
  std::vector<Worst> worst(n);
  ParallelFor(n, [&](size_t x) {
    Worst& w = worst[x];
    for (size_t y = x; y < n; ++y) {
      const Rational delta = u[x] + u[y] - u[grid.Sum(x, y)];
      if (delta.sign() < 0 && (!w.found || delta < w.delta)) {
        w = {y, delta, true};
      }
    }
  });
  std::optional<size_t> best;
  for (size_t x = 0; x < n; ++x) {
    if (worst[x].found && (!best || worst[x].delta < worst[*best].delta)) {
      best = x;
    }
  }
  if (best) {
    const size_t x = *best;
    const size_t y = worst[x].y;
    return ViolationWitness{ViolationWitness::Kind::kSubadditivity,
                            {grid.Point(x), grid.Point(y)},
                            u[x] + u[y],
                            u[grid.Sum(x, y)]};
  }

  if (!model.f_index) throw GridMismatch("f is off the grid");
  for (size_t x = 0; x < n; ++x) {
    std::vector<int64_t> c = grid.Coordinates(x);
    for (size_t d = 0; d < c.size(); ++d) c[d] = -(*model.f_index)[d] - c[d];
    const Rational sum = u[x] + u[grid.IndexOf(c)];
    if (sum != 1) {
      return ViolationWitness{ViolationWitness::Kind::kSymmetry,
                              {grid.Point(x)}, sum, Rational(1)};
    }
  }
  return std::nullopt;
}

std::vector<int64_t> SelectGridDenominators(
    const PeriodicPLF& phi, const std::vector<int64_t>& multiples) {
  const int64_t base = phi.NaturalDenominator();
  std::vector<int64_t> out;
  for (int64_t m : multiples) {
    if (m < 1) throw ContractViolation("SelectGridDenominators: multiple < 1");
    out.push_back(base * m);
  }
  return out;
}

ConsistencyReport CrossCheck(const PeriodicPLF& phi, int64_t q) {
  ConsistencyReport report;
  report.q = q;
  const Certificate cert = CertifyFacet(phi);
  report.exact_minimal = cert.hypotheses.minimality.passed();
  report.certified = cert.verdict == Verdict::kFacetCertified;
  const auto grid_witness = OracleMinimality(RestrictToGrid(phi, q));
  report.grid_minimal = !grid_witness.has_value();
  report.grid_unique = OracleExtremality(phi, q).unique();
  if (report.exact_minimal && !report.grid_minimal) {
    report.defects.push_back("exact minimality passed but the grid check "
                             "failed: " + grid_witness->Describe());
  }
  if (report.certified && !report.grid_unique) {
    report.defects.push_back("facet certified but the grid system at q = " +
                             std::to_string(q) + " is not unique");
  }
  return report;
}

}  // namespace groupcert
