// Copyright 2026 The gdw authors
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

#ifndef GDW_PARALLEL_HPP
#define GDW_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gdw {

// Number of worker threads: the GDW_THREADS environment variable when set,
// otherwise the hardware concurrency. Always at least 1.
int worker_count();

// Runs body(begin, end) over a static partition of [0, n) across workers.
// Callers must make per-index work independent; any exception thrown by a
// worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace gdw

#endif  // GDW_PARALLEL_HPP
