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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groupcert/catalog.h"
#include "groupcert/certify.h"
#include "groupcert/geometry.h"
#include "groupcert/json_io.h"
#include "groupcert/linalg.h"
#include "groupcert/minimality.h"
#include "groupcert/oracle.h"
#include "groupcert/replay.h"

namespace groupcert {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(failed_) + " failure(s)";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  size_t failed_ = 0;
};

RatVector V(std::initializer_list<const char*> parts) {
  RatVector v;
  for (const char* p : parts) v.push_back(Rational::Parse(p));
  return v;
}

std::vector<Rational> GmiFamily() {
  std::vector<Rational> fs;
  for (const char* f : {"1/5", "2/5", "1/2", "3/7", "7/11"}) {
    fs.push_back(Rational::Parse(f));
  }
  std::mt19937_64 rng(20240611);
  while (fs.size() < 25) {
    const int64_t den = 2 + static_cast<int64_t>(rng() % 29);
    const int64_t num = 1 + static_cast<int64_t>(rng() % (den - 1));
    fs.emplace_back(num, den);
  }
  return fs;
}

struct Fixture {
  std::string name;
  PeriodicPLF phi;
};

std::vector<Fixture> AllFixtures() {
  const PeriodicPLF gmi = catalog::Gmi(Rational(2, 5));
  return {{"gmi(2/5)", gmi},
          {"wrong_peak(2/5)", catalog::WrongPeak(Rational(2, 5))},
          {"spike", catalog::Spike()},
          {"diagonal_lift", catalog::DiagonalLift(gmi, V({"1/5", "1/5"}))},
          {"triangle_lifting", catalog::TriangleLiftingFixture()},
          {"non_extreme_three_slope", catalog::NonExtremeThreeSlope()}};
}

// Certificates accepted in criteria 1 and 4, replayed in criterion 8.
std::vector<Json> g_certificates;

Check CriterionGmiFamily(double* seconds) {
  Check c;
  const auto start = Clock::now();
  for (const Rational& f : GmiFamily()) {
    const Certificate cert = CertifyFacet(catalog::Gmi(f));
    const std::vector<RatVector> expected = {{Rational(1) / (Rational(1) - f)},
                                             {-Rational(1) / f}};
    const bool ok = cert.verdict == Verdict::kFacetCertified &&
                    cert.system && cert.system->solution == expected;
    c.Expect(ok, "f=" + f.ToString());
    if (ok) g_certificates.push_back(CertificateToJson(cert));
  }
  *seconds = SecondsSince(start);
  c.Expect(*seconds < 5.0, "runtime");
  return c;
}

Check CriterionOracleAgreement(double* seconds) {
  Check c;
  const auto start = Clock::now();
  for (const Rational& f : GmiFamily()) {
    const PeriodicPLF phi = catalog::Gmi(f);
    for (int64_t q : SelectGridDenominators(phi, {1, 2, 3})) {
      c.Expect(OracleExtremality(phi, q).unique(),
               "f=" + f.ToString() + " q=" + std::to_string(q));
    }
  }
  *seconds = SecondsSince(start);
  c.Expect(*seconds < 10.0, "runtime");
  return c;
}

Check CriterionNegativeFixtures() {
  Check c;
  const MinimalityReport wrong = CheckMinimality(catalog::WrongPeak(Rational(2, 5)));
  const auto& sym = wrong.symmetry.witness;
  c.Expect(sym && sym->points[0] == V({"0"}) && sym->lhs == Rational(2, 3) &&
               sym->rhs == Rational(1),
           "wrong_peak symmetry witness");
  c.Expect(!CertifyFacet(catalog::WrongPeak(Rational(2, 5))).hypotheses
                .minimality.passed(),
           "wrong_peak certify");

  const CheckResult spike = CheckSubadditivity(catalog::Spike());
  const auto& sub = spike.witness;
  c.Expect(sub && sub->points[0] == V({"1/4"}) && sub->points[1] == V({"1/4"}) &&
               sub->lhs == Rational(1, 5) && sub->rhs == Rational(9, 10) &&
               sub->Reproduces(catalog::Spike()),
           "spike subadditivity witness");

  const PeriodicPLF lift =
      catalog::DiagonalLift(catalog::Gmi(Rational(2, 5)), V({"1/5", "1/5"}));
  const SlopePartition p = ComputeSlopePartition(lift);
  const Certificate cert = CertifyFacet(lift);
  c.Expect(cert.failed_stage == "genuine-dimensionality", "lift stage");
  c.Expect(!GenuinelyKDimensional(p) && Rank(RatMatrix::FromRows(p.Gradients())) == 1,
           "lift gradient rank");
  return c;
}

Check CriterionTriangle(double* seconds) {
  Check c;
  const auto start = Clock::now();
  const PeriodicPLF tri = catalog::TriangleLiftingFixture();
  const Certificate cert = CertifyFacet(tri);
  c.Expect(cert.hypotheses.slope_count == 3, "slope count");
  c.Expect(cert.hypotheses.genuinely_k_dimensional, "genuinely 2-dimensional");
  c.Expect(cert.verdict == Verdict::kFacetCertified && cert.system &&
               cert.system->unique() && cert.system->solution == cert.gradients,
           "system");
  if (c.ok()) g_certificates.push_back(CertificateToJson(cert));
  const int64_t q_star = tri.NaturalDenominator();
  for (int64_t q : {q_star, 2 * q_star}) {
    c.Expect(OracleExtremality(tri, q).unique(), "oracle q=" + std::to_string(q));
  }
  *seconds = SecondsSince(start);
  c.Expect(*seconds < 60.0, "runtime");
  return c;
}

Rational RandomRational(std::mt19937_64& rng) {
  const int64_t den = 1 + static_cast<int64_t>(rng() % 12);
  const int64_t num = static_cast<int64_t>(rng() % (4 * den + 1)) - 2 * den;
  return Rational(num, den);
}

Check CriterionSegmentIdentity() {
  Check c;
  std::mt19937_64 rng(5);
  for (const Fixture& fx : AllFixtures()) {
    const SlopePartition p = ComputeSlopePartition(fx.phi);
    const Rational base = fx.phi.Evaluate(RatVector(fx.phi.k()));
    for (int trial = 0; trial < 100; ++trial) {
      RatVector r;
      for (size_t i = 0; i < fx.phi.k(); ++i) r.push_back(RandomRational(rng));
      const SegmentDecomposition d = SegmentMu(fx.phi, p, r);
      Rational total;
      bool nonnegative = true;
      for (const Rational& m : d.masses) {
        total += m;
        nonnegative = nonnegative && m >= Rational(0);
      }
      Rational integral;
      for (size_t i = 0; i < p.size(); ++i) {
        integral += d.masses[i] * Dot(p.classes[i].gradient, r);
      }
      c.Expect(nonnegative && total == Rational(1) &&
                   fx.phi.Evaluate(r) - base == integral,
               fx.name + " r=" + ToString(r));
    }
  }
  const PeriodicPLF gmi = catalog::Gmi(Rational(2, 5));
  c.Expect(SegmentMu(gmi, ComputeSlopePartition(gmi), V({"1"})).masses ==
               V({"3/5", "2/5"}),
           "gmi r=1");
  return c;
}

Check CriterionInvariants() {
  Check c;
  std::vector<PeriodicPLF> positives;
  for (const Rational& f : GmiFamily()) positives.push_back(catalog::Gmi(f));
  positives.push_back(catalog::TriangleLiftingFixture());
  for (const PeriodicPLF& phi : positives) {
    const SlopePartition p = ComputeSlopePartition(phi);
    const DirectionSet d = FindDirections(phi, p);
    c.Expect(ConeSpans(d.directions), "directions span");
    c.Expect(ProperSubsetsIndependent(d.directions), "proper subsets");
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        c.Expect(Dot(d.directions[i], p.classes[j].gradient) > Rational(0),
                 "r.g positive");
      }
    }
  }
  std::mt19937_64 rng(6);
  std::vector<RatVector> fs;
  for (const PeriodicPLF& phi : positives) fs.push_back(phi.f());
  for (int trial = 0; trial < 40; ++trial) {
    RatVector f;
    for (size_t i = 0; i < 1 + trial % 3; ++i) {
      f.push_back(RandomRational(rng).FractionalPart());
    }
    fs.push_back(f);
  }
  for (const RatVector& f : fs) {
    const AnchorSet a = ChooseAnchors(f);
    c.Expect(ConeSpans(a.anchors), "anchors span " + ToString(f));
    for (size_t i = 0; i < a.anchors.size(); ++i) {
      bool integral = true;
      for (const Rational& x : Add(a.anchors[i], f)) {
        integral = integral && x.is_integer();
      }
      c.Expect(integral && Add(a.anchors[i], f) == a.lattice_points[i],
               "anchor lattice " + ToString(f));
    }
  }
  return c;
}

Check CriterionSubadditivityCrossCheck(size_t* passes, size_t* failures) {
  Check c;
  *passes = *failures = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const int64_t q = 2 + static_cast<int64_t>(seed % 7);
    const PeriodicPLF phi = catalog::RandomPlf(1, q, seed);
    const CheckResult exact = CheckSubadditivity(phi);
    const std::string tag = "seed=" + std::to_string(seed);
    if (exact.passed()) {
      ++*passes;
      c.Expect(CheckSubadditivityOnGrid(phi, 2 * q).passed(), tag + " grid");
    } else {
      ++*failures;
      const ViolationWitness& w = *exact.witness;
      c.Expect(w.Reproduces(phi) && w.lhs < w.rhs, tag + " witness");
      c.Expect(phi.Evaluate(w.points[0]) + phi.Evaluate(w.points[1]) <
                   phi.Evaluate(Add(w.points[0], w.points[1])),
               tag + " re-evaluation");
    }
  }
  c.Expect(*passes > 0 && *failures > 0, "both outcomes exercised");
  return c;
}

// Calls visit on every string leaf that parses as a rational.
void ForEachRational(Json& j, const std::function<void(Json&)>& visit) {
  if (j.is_string()) {
    try {
      Rational::Parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      return;
    }
    visit(j);
  } else if (j.is_structured()) {
    for (auto& child : j) ForEachRational(child, visit);
  }
}

Check CriterionReplay(size_t* mutations) {
  Check c;
  *mutations = 0;
  c.Expect(g_certificates.size() == 26, "certificate count");
  const Rational bump(1, 7919);
  for (const Json& cert : g_certificates) {
    const ReplayResult r = VerifyCertificate(cert);
    c.Expect(r.accepted, r.failures.empty() ? "replay" : r.failures.front());
    Json copy = cert;
    std::vector<Json*> leaves;
    ForEachRational(copy, [&](Json& leaf) { leaves.push_back(&leaf); });
    for (Json* leaf : leaves) {
      const std::string original = leaf->get<std::string>();
      *leaf = (Rational::Parse(original) + bump).ToString();
      c.Expect(!VerifyCertificate(copy).accepted,
               "mutation accepted in " + cert["f"].dump());
      *leaf = original;
      ++*mutations;
    }
  }
  return c;
}

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", s);
  return buf;
}

int Main() {
  bool all = true;
  auto report = [&](int n, const char* title, const Check& c,
                    const std::string& detail) {
    all = all && c.ok();
    std::cout << "criterion " << n << " [" << (c.ok() ? "PASS" : "FAIL")
              << "] " << title << ": " << (c.ok() ? detail : c.Summary())
              << std::endl;
  };
  double t1 = 0, t2 = 0, t4 = 0;
  size_t passes = 0, failures = 0, mutations = 0;
  const Check c1 = CriterionGmiFamily(&t1);
  report(1, "GMI family certified", c1, "25 values of f in " + Seconds(t1));
  const Check c2 = CriterionOracleAgreement(&t2);
  report(2, "oracle agreement", c2, "75 grids unique in " + Seconds(t2));
  report(3, "negative fixtures", CriterionNegativeFixtures(),
         "witnesses exact");
  const Check c4 = CriterionTriangle(&t4);
  report(4, "triangle lifting", c4,
         "certified and unique at q*, 2q* in " + Seconds(t4));
  report(5, "segment decomposition", CriterionSegmentIdentity(),
         "600 targets exact");
  report(6, "direction and anchor invariants", CriterionInvariants(),
         "all invariants hold");
  const Check c7 = CriterionSubadditivityCrossCheck(&passes, &failures);
  report(7, "subadditivity cross-check", c7,
         std::to_string(passes) + " pass, " + std::to_string(failures) +
             " fail, no disagreement");
  const Check c8 = CriterionReplay(&mutations);
  report(8, "certificate replay", c8,
         std::to_string(g_certificates.size()) + " accepted, " +
             std::to_string(mutations) + " mutations rejected");
  std::cout << (all ? "all criteria passed" : "some criteria FAILED")
            << std::endl;
  return all ? 0 : 1;
}

}  // namespace
}  // namespace groupcert

int main() { return groupcert::Main(); }
