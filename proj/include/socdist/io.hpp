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

#include <string>
#include <vector>

#include "socdist/points.hpp"

namespace socdist {

/// Point file contents before field interpretation. Format (version 1):
/// {"version": 1, "n": int, "points": [["0", "1", "-2/3"], ...]} with every
/// coordinate a decimal integer string or "p/q" rational string.
struct RawPointFile {
  int version = 1;
  int n = 0;
  std::vector<std::vector<std::string>> coords;
};

RawPointFile parse_point_file(const std::string& json_text, const std::string& origin);
RawPointFile read_point_file(const std::string& path);
std::string serialize_point_file(const RawPointFile& raw);
void write_point_file(const std::string& path, const RawPointFile& raw);

/// FNV-1a 64-bit digest of a byte string, as 16 hex digits.
std::string digest64(const std::string& bytes);
std::string file_digest(const std::string& path);

template <Field K>
PointSet<K> to_point_set(const RawPointFile& raw) {
  std::vector<std::vector<K>> pts;
  pts.reserve(raw.coords.size());
  for (std::size_t i = 0; i < raw.coords.size(); ++i) {
    std::vector<K> v;
    v.reserve(raw.coords[i].size());
    for (const std::string& s : raw.coords[i]) {
      auto x = K::parse(s);
      if (!x)
        throw input_error("point " + std::to_string(i) + ": bad coordinate \"" + s + "\"");
      v.push_back(*x);
    }
    pts.push_back(std::move(v));
  }
  return normalize(pts, raw.n);
}

template <Field K>
RawPointFile from_point_set(const PointSet<K>& ps) {
  RawPointFile raw;
  raw.n = ps.dim;
  for (const auto& p : ps.points) {
    std::vector<std::string> row;
    row.reserve(p.size());
    for (const K& c : p) row.push_back(c.str());
    raw.coords.push_back(std::move(row));
  }
  return raw;
}

}  // namespace socdist
