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

#include "socdist/betti.hpp"

#include <algorithm>
#include <sstream>

#include "socdist/field.hpp"

namespace socdist {

long BettiTable::total(int i) const {
  long t = 0;
  for (const auto& [ij, b] : beta)
    if (ij.first == i) t += b;
  return t;
}

BettiTable betti_from_shifts(const std::vector<GradedFreeModule>& modules, int ambient_dim) {
  if (modules.empty() || modules[0].shifts != std::vector<int>{0})
    throw internal_error("resolution does not start at R");
  BettiTable t;
  t.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int j : modules[i].shifts) ++t.beta[{static_cast<int>(i), j}];
  t.projective_dimension = static_cast<int>(modules.size()) - 1;
  t.regularity = 0;
  for (const auto& [ij, b] : t.beta) t.regularity = std::max(t.regularity, ij.second - ij.first);
  t.last_shifts = modules.back().shifts;
  std::sort(t.last_shifts.begin(), t.last_shifts.end());
  if (t.last_shifts.empty()) throw internal_error("empty last module in resolution");
  t.a_min = t.last_shifts.front();
  for (int a : t.last_shifts) t.socle_degrees.push_back(a - ambient_dim);
  t.min_socle_degree = t.a_min - ambient_dim;
  return t;
}

std::string render_betti(const BettiTable& t) {
  int pd = t.projective_dimension;
  int maxrow = 0;
  for (const auto& [ij, b] : t.beta) maxrow = std::max(maxrow, ij.second - ij.first);

  auto cell = [&](int i, int row) -> std::string {
    auto it = t.beta.find({i, row + i});
    if (it == t.beta.end() || it->second == 0) return ".";
    return std::to_string(it->second);
  };

  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 1, 1);
  for (int i = 0; i <= pd; ++i) {
    width[static_cast<std::size_t>(i)] =
        std::max(width[static_cast<std::size_t>(i)], std::to_string(i).size());
    width[static_cast<std::size_t>(i)] =
        std::max(width[static_cast<std::size_t>(i)], std::to_string(t.total(i)).size());
    for (int row = 0; row <= maxrow; ++row)
      width[static_cast<std::size_t>(i)] =
          std::max(width[static_cast<std::size_t>(i)], cell(i, row).size());
  }

  std::size_t label = std::max<std::size_t>(std::string("total:").size(),
                                            std::to_string(maxrow).size() + 1);
  std::ostringstream os;
  auto pad_left = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };

  os << std::string(label, ' ');
  for (int i = 0; i <= pd; ++i) os << "  " << pad_left(std::to_string(i), width[static_cast<std::size_t>(i)]);
  os << "\n";
  os << pad_left("total:", label);
  for (int i = 0; i <= pd; ++i)
    os << "  " << pad_left(std::to_string(t.total(i)), width[static_cast<std::size_t>(i)]);
  os << "\n";
  for (int row = 0; row <= maxrow; ++row) {
    os << pad_left(std::to_string(row) + ":", label);
    for (int i = 0; i <= pd; ++i) os << "  " << pad_left(cell(i, row), width[static_cast<std::size_t>(i)]);
    os << "\n";
  }
  return os.str();
}

}  // namespace socdist
