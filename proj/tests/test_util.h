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

#ifndef GROUPCERT_TESTS_TEST_UTIL_H_
#define GROUPCERT_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "groupcert/linalg.h"
#include "groupcert/rational.h"

namespace groupcert::testing {

inline Rational R(const char* text) { return Rational::Parse(text); }

inline RatVector V(std::initializer_list<const char*> entries) {
  RatVector v;
  for (const char* e : entries) v.push_back(Rational::Parse(e));
  return v;
}

// Rational with numerator in [-span*den, span*den] and denominator in
// [1, max_den].
inline Rational RandomRational(std::mt19937_64& rng, int64_t span,
                               int64_t max_den) {
  std::uniform_int_distribution<int64_t> den_dist(1, max_den);
  const int64_t den = den_dist(rng);
  std::uniform_int_distribution<int64_t> num_dist(-span * den, span * den);
  return Rational(num_dist(rng), den);
}

inline RatVector RandomVector(std::mt19937_64& rng, size_t k, int64_t span,
                              int64_t max_den) {
  RatVector v;
  for (size_t i = 0; i < k; ++i) v.push_back(RandomRational(rng, span, max_den));
  return v;
}

}  // namespace groupcert::testing

#endif  // GROUPCERT_TESTS_TEST_UTIL_H_
