// Copyright 2026 The aplab Authors.
//
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

#pragma once

#include <cstddef>
#include <functional>

namespace aplab {

/// Worker count: hardware concurrency, capped by APLAB_THREADS when set.
unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
/// is handled exactly once; callers write results into per-index slots so the
/// outcome never depends on scheduling. The first exception (lowest index)
/// is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace aplab
