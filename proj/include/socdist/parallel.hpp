/*
   Copyright 2026 The socdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace socdist {

/// Execution policy for the data-parallel kernels. Results are bit-identical
/// between the two: parallel loops write into index-addressed slots and all
/// reductions happen serially afterwards.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename F>
void parallel_for(std::size_t n, Exec policy, F&& body) {
#ifdef _OPENMP
  if (policy == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)policy;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace socdist
