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

#include <cstdint>

namespace socdist {

/// splitmix64: fixed 64-bit generator with portable, platform-independent
/// streams. split(k) derives an independent child stream; range mapping is
/// by modulo (documented as part of the scheme, bias is irrelevant here).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream keyed by `stream`.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 mixer(state_ ^ (0xA0761D6478BD642FULL + stream));
    return SplitMix64(mixer.next());
  }

  /// Uniform in [lo, hi] inclusive (lo <= hi).
  long long uniform(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace socdist
