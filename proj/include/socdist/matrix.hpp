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
#include <utility>
#include <vector>

#include "socdist/field.hpp"

namespace socdist {

/// Dense matrix over an exact field. Dimensions are fixed at construction.
template <Field K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::from_int(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

template <Field K>
struct RrefResult {
  Matrix<K> R;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form. Pivot choice: leftmost nonzero column, first
/// nonzero row; pivots normalized to 1. The result is the unique RREF of M.
template <Field K>
RrefResult<K> rref(Matrix<K> m) {
  RrefResult<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    K inv = m.at(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.R = std::move(m);
  return out;
}

/// Rank by forward elimination (no back-substitution or normalization).
template <Field K>
std::size_t rank(Matrix<K> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      K f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

/// Canonical kernel basis read off the RREF: one vector per free column,
/// with that free variable set to 1 and the other free variables 0.
template <Field K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  RrefResult<K> rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols());
    v[free] = K::from_int(1);
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
      v[rr.pivots[pr]] = -rr.R.at(pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v) {
  std::vector<K> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    K acc;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

template <Field K>
Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

}  // namespace socdist
