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

// Independent re-verification of a serialized certificate. Nothing is
// recomputed from the function itself: the checks use only the numbers stored
// in the certificate and generic exact linear algebra.

#ifndef GROUPCERT_REPLAY_H_
#define GROUPCERT_REPLAY_H_

#include <string>
#include <vector>

#include "groupcert/json_io.h"

namespace groupcert {

struct ReplayResult {
  bool accepted = false;
  std::vector<std::string> failures;
};

// Accepts only certificates whose verdict is facet-certified or
// grid-verified and whose every stored equation and invariant checks out.
ReplayResult VerifyCertificate(const Json& certificate);

}  // namespace groupcert

#endif  // GROUPCERT_REPLAY_H_
