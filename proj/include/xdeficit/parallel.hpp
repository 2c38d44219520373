// Copyright 2026 The xdeficit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XDEFICIT_PARALLEL_HPP
#define XDEFICIT_PARALLEL_HPP

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xdeficit {

/// Number of worker threads a parallel loop would use.
inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// Runs body(i) for i in [0, n) across OpenMP threads. Each index must
/// write only its own output slot. The first exception thrown by any body
/// is rethrown on the calling thread after the loop.
template <class Body>
void parallel_for(long n, Body&& body) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace xdeficit

#endif  // XDEFICIT_PARALLEL_HPP
