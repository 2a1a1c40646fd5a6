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

#include "groupcert/replay.h"

#include <algorithm>
#include <exception>

#include "groupcert/geometry.h"
#include "groupcert/linalg.h"

namespace groupcert {
namespace {

class Replayer {
 public:
  explicit Replayer(const Json& cert) : cert_(cert) {}

  ReplayResult Run() {
    try {
      Check();
    } catch (const std::exception& e) {
      Fail(std::string("unreadable certificate: ") + e.what());
    }
    result_.accepted = result_.failures.empty();
    return result_;
  }

 private:
  void Fail(const std::string& why) { result_.failures.push_back(why); }

  void Expect(bool ok, const std::string& why) {
    if (!ok) Fail(why);
  }

  void Check() {
    const std::string verdict = cert_.at("verdict").get<std::string>();
    if (verdict != "facet-certified" && verdict != "grid-verified") {
      Fail("verdict " + verdict + " is not a positive certificate");
      return;
    }
    const size_t k = cert_.at("k").get<size_t>();
    const size_t n = k + 1;
    const RatVector f = RationalsFromJson(cert_.at("f"));
    const auto gradients = VectorsFromJson(cert_.at("gradients"));
    const Json& dirs = cert_.at("directions");
    const Rational epsilon = RationalFromJson(dirs.at("epsilon"));
    const auto directions = VectorsFromJson(dirs.at("vectors"));
    const auto anchors = VectorsFromJson(cert_.at("anchors").at("vectors"));
    const auto lattice =
        VectorsFromJson(cert_.at("anchors").at("lattice_points"));
    const auto mu = VectorsFromJson(cert_.at("mu"));
    const Json& sys = cert_.at("system");
    const auto solution = VectorsFromJson(sys.at("solution"));

    auto shaped = [&](const std::vector<RatVector>& vs, size_t len) {
      return vs.size() == n &&
             std::all_of(vs.begin(), vs.end(),
                         [len](const RatVector& v) { return v.size() == len; });
    };
    if (f.size() != k || !shaped(gradients, k) || !shaped(directions, k) ||
        !shaped(anchors, k) || !shaped(lattice, k) || !shaped(mu, n) ||
        !shaped(solution, k)) {
      Fail("inconsistent dimensions");
      return;
    }

    for (const auto& x : f) Expect(x.sign() >= 0 && x < 1, "f outside [0,1)^k");

    // Hypotheses as recorded.
    const Json& hyp = cert_.at("hypotheses");
    Expect(hyp.at("minimality").at("passed").get<bool>(), "minimality failed");
    Expect(hyp.at("slope_count").get<size_t>() == n, "slope count != k+1");
    for (const auto& b : hyp.at("origin_incidence")) {
      Expect(b.get<bool>(), "origin incidence failed");
    }
    Expect(ConeSpans(gradients), "gradients do not span R^k conically");
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        Expect(gradients[i] != gradients[j], "repeated gradient");
      }
    }

    // Anchors lie in Z^k - f and span.
    for (size_t i = 0; i < n; ++i) {
      for (const auto& x : lattice[i]) {
        Expect(x.is_integer(), "lattice point is not integral");
      }
      Expect(Add(anchors[i], f) == lattice[i], "anchor + f != lattice point");
    }
    Expect(ConeSpans(anchors), "anchors do not span R^k conically");

    // mu rows are probability vectors.
    for (const auto& row : mu) {
      Rational sum;
      for (const auto& x : row) {
        Expect(x.sign() >= 0, "negative mu entry");
        sum += x;
      }
      Expect(sum == 1, "mu row does not sum to 1");
    }

    // Directions.
    Expect(epsilon.sign() > 0, "epsilon must be positive");
    for (const auto& r : directions) {
      Expect(NormInf(r) == epsilon, "direction norm != epsilon");
    }
    Expect(ConeSpans(directions), "directions do not span R^k conically");
    Expect(ProperSubsetsIndependent(directions),
           "a proper subset of directions is dependent");
    for (size_t i = 0; i < n; ++i) {
      std::optional<Rational> common;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Rational rg = Dot(directions[i], gradients[j]);
        Expect(rg.sign() > 0, "r^i . g^j <= 0");
        if (common) Expect(rg == *common, "r^i . g^j differs across j");
        common = rg;
      }
    }

    // Rebuild the system from the stored witnesses.
    RatMatrix a(0, n * k);
    RatVector rhs;
    for (size_t i = 0; i < n; ++i) {
      RatVector row = Zeros(n * k);
      for (size_t j = 0; j < n; ++j) {
        for (size_t c = 0; c < k; ++c) row[j * k + c] = mu[i][j] * anchors[i][c];
      }
      a.AppendRow(row);
      rhs.push_back(1);
    }
    size_t direction_rows = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        for (size_t l = j + 1; l < n; ++l) {
          if (j == i || l == i) continue;
          RatVector row = Zeros(n * k);
          for (size_t c = 0; c < k; ++c) {
            row[j * k + c] = directions[i][c];
            row[l * k + c] = -directions[i][c];
          }
          a.AppendRow(row);
          rhs.push_back(0);
          ++direction_rows;
        }
      }
    }
    RatVector own;
    for (const auto& g : gradients) own.insert(own.end(), g.begin(), g.end());
    Expect(a.Multiply(own) == rhs, "gradients violate the stored system");

    const SolveReport solved = RankAndSolve(a, rhs);
    Expect(solved.kind == SolveReport::Kind::kUnique, "system is not unique");
    Expect(sys.at("kind").get<std::string>() == "unique", "stored kind");
    Expect(sys.at("unknowns").get<size_t>() == n * k, "stored unknowns");
    Expect(sys.at("integral_equations").get<size_t>() == n,
           "stored integral equation count");
    Expect(sys.at("direction_equations").get<size_t>() == direction_rows,
           "stored direction equation count");
    Expect(sys.at("rank").get<size_t>() == solved.rank, "stored rank");
    Expect(sys.at("matches_gradients").get<bool>(), "stored match flag");
    if (solved.kind == SolveReport::Kind::kUnique) {
      RatVector stored;
      for (const auto& g : solution) stored.insert(stored.end(), g.begin(), g.end());
      Expect(stored == solved.solution, "stored solution differs");
      Expect(solved.solution == own, "solution differs from the gradients");
    }
  }

  const Json& cert_;
  ReplayResult result_;
};

}  // namespace

ReplayResult VerifyCertificate(const Json& certificate) {
  return Replayer(certificate).Run();
}

}  // namespace groupcert
