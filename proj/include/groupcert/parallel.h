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

// Minimal fork-join helper. The worker count honours GROUPCERT_THREADS.

#ifndef GROUPCERT_PARALLEL_H_
#define GROUPCERT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace groupcert {

// Positive integer from GROUPCERT_THREADS when set and valid, otherwise the
// hardware concurrency (at least 1).
size_t WorkerCount();

// Calls body(i) for every i in [0, n), spread over WorkerCount() threads.
// Iterations must be independent; results are collected by index so the
// outcome does not depend on scheduling.
void ParallelFor(size_t n, const std::function<void(size_t)>& body);

}  // namespace groupcert

#endif  // GROUPCERT_PARALLEL_H_
