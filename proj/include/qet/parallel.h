// Copyright 2026 The Toric QET Authors
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

#ifndef QET_PARALLEL_H_
#define QET_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qet {

/// Worker count for sweeps: QET_THREADS if set and positive, else the
/// hardware concurrency.
inline size_t sweep_threads() {
  if (const char *env = std::getenv("QET_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<size_t>(v);
    } catch (...) {
    }
  }
  return std::max<size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) over contiguous blocks. body must only
/// write to per-index state.
template <typename Body>
void parallel_for(size_t count, Body body) {
  size_t workers = std::min(sweep_threads(), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  size_t block = (count + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    size_t begin = w * block;
    size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace qet

#endif  // QET_PARALLEL_H_
