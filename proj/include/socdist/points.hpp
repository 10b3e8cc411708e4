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

#include "socdist/field.hpp"
#include "socdist/matrix.hpp"

namespace socdist {

/// Labeled points of projective dim-space with exact homogeneous coordinates,
/// canonically scaled so the first nonzero coordinate is 1. Point labels are
/// the stable input indices.
template <Field K>
struct PointSet {
  int dim = 0;                            // ambient projective dimension n
  std::vector<std::vector<K>> points;     // each of length dim + 1

  int m() const { return static_cast<int>(points.size()); }
  int nvars() const { return dim + 1; }
};

template <Field K>
std::vector<K> canonical_scale(std::vector<K> v) {
  for (const K& c : v) {
    if (c.is_zero()) continue;
    K inv = c.inv();
    for (K& x : v) x *= inv;
    return v;
  }
  throw input_error("zero coordinate vector is not a projective point");
}

/// Canonicalize and validate: rejects zero vectors and projective duplicates
/// (point sets are reduced; duplicates are an input error, not merged).
template <Field K>
PointSet<K> normalize(const std::vector<std::vector<K>>& raw, int dim) {
  PointSet<K> ps;
  ps.dim = dim;
  ps.points.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (static_cast<int>(raw[i].size()) != dim + 1)
      throw input_error("point " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                        " coordinates, expected " + std::to_string(dim + 1));
    ps.points.push_back(canonical_scale(raw[i]));
  }
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    for (std::size_t j = i + 1; j < ps.points.size(); ++j)
      if (ps.points[i] == ps.points[j])
        throw input_error("points " + std::to_string(i) + " and " + std::to_string(j) +
                          " are projectively equal (the set must be reduced)");
  return ps;
}

template <Field K>
Matrix<K> coordinate_matrix(const PointSet<K>& ps) {
  Matrix<K> m(static_cast<std::size_t>(ps.m()), static_cast<std::size_t>(ps.nvars()));
  for (int i = 0; i < ps.m(); ++i)
    for (int j = 0; j < ps.nvars(); ++j)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          ps.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

/// True iff the coordinate matrix has full column rank dim + 1, i.e. the
/// points do not all lie in one hyperplane.
template <Field K>
bool is_nondegenerate(const PointSet<K>& ps) {
  return rank(coordinate_matrix(ps)) == static_cast<std::size_t>(ps.nvars());
}

/// Subset of the points keeping input order; labels refer to the original set.
template <Field K>
PointSet<K> subset(const PointSet<K>& ps, const std::vector<int>& keep) {
  PointSet<K> out;
  out.dim = ps.dim;
  out.points.reserve(keep.size());
  for (int i : keep) out.points.push_back(ps.points[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace socdist
