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

#include <map>
#include <string>
#include <vector>

namespace socdist {

/// Shift data of a graded free module ⊕ R(-shift_k).
struct GradedFreeModule {
  std::vector<int> shifts;
  int rank() const { return static_cast<int>(shifts.size()); }
};

/// Graded Betti numbers of a minimal free resolution, with the derived
/// homological invariants of a point set in projective ambient_dim-space.
struct BettiTable {
  std::map<std::pair<int, int>, long> beta;  // (homological index i, internal degree j) -> count
  int ambient_dim = 0;                       // n
  int projective_dimension = 0;
  int regularity = 0;                        // max(j - i) over nonzero beta
  std::vector<int> last_shifts;              // multiset {a_i}, sorted ascending
  int a_min = 0;                             // a(Γ) = min a_i
  std::vector<int> socle_degrees;            // {a_i - n}, sorted ascending
  int min_socle_degree = 0;                  // A_n

  long total(int i) const;
};

/// Derive the Betti table from the shift data of a minimal resolution.
/// modules[0] must be R itself (single shift 0).
BettiTable betti_from_shifts(const std::vector<GradedFreeModule>& modules, int ambient_dim);

/// Classic Betti diagram: columns are homological indices, rows are j - i,
/// with a "total" header row; zero entries print as ".". The exact format is
/// pinned by golden files in the test suite.
std::string render_betti(const BettiTable& t);

}  // namespace socdist
