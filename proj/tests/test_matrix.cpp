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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "socdist/matrix.hpp"
#include "socdist/prng.hpp"

using namespace socdist;

namespace {

// Independent rank oracle: fraction-free Bareiss elimination over exact
// integers (GMP), written against the textbook recurrence, no pivoting
// normalization shared with the implementation under test.
std::size_t bareiss_rank(std::vector<std::vector<long long>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(a[i][j]);

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Matrix<Rational> from_ints(const std::vector<std::vector<long long>>& a) {
  Matrix<Rational> m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m.at(i, j) = Rational(a[i][j]);
  return m;
}

std::vector<std::vector<long long>> random_int_matrix(SplitMix64& rng, std::size_t rows,
                                                      std::size_t cols, long long bound) {
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (auto& row : a)
    for (auto& x : row) x = rng.uniform(-bound, bound);
  return a;
}

}  // namespace

TEST_CASE("rref of identity is identity") {
  auto m = Matrix<Rational>::identity(3);
  auto rr = rref(m);
  CHECK(rr.R == m);
  CHECK(rr.rank == 3);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("proportional rows collapse to rank 1") {
  auto rr = rref(from_ints({{1, 2}, {2, 4}}));
  CHECK(rr.rank == 1);
  CHECK(rr.pivots == std::vector<std::size_t>{0});
  CHECK(rr.R.at(0, 0) == Rational(1));
  CHECK(rr.R.at(0, 1) == Rational(2));
  CHECK(rr.R.at(1, 0).is_zero());
  CHECK(rr.R.at(1, 1).is_zero());
}

TEST_CASE("random matrices: rank agrees with the Bareiss oracle") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_int_matrix(rng, 6, 10, 9);
    // plant some row dependencies to vary the rank
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < 10; ++j) a[4][j] = a[0][j] + 2 * a[1][j];
    auto m = from_ints(a);
    CHECK(rref(m).rank == bareiss_rank(a));
    CHECK(rank(m) == bareiss_rank(a));
  }
}

TEST_CASE("rref is idempotent") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = from_ints(random_int_matrix(rng, 5, 7, 5));
    auto once = rref(m).R;
    CHECK(rref(once).R == once);
  }
}

TEST_CASE("rank equals rank of transpose") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    auto m = from_ints(random_int_matrix(rng, 4, 8, 6));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel_basis(Matrix<Rational>::identity(4)).empty());
}

TEST_CASE("kernel of a single all-ones constraint") {
  Matrix<Rational> m(1, 3);
  for (std::size_t j = 0; j < 3; ++j) m.at(0, j) = Rational(1);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    Rational s;
    for (const auto& x : v) s += x;
    CHECK(s.is_zero());
  }
}

TEST_CASE("kernel vectors multiply back to zero and count cols - rank") {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = from_ints(random_int_matrix(rng, 4, 7, 8));
    auto basis = kernel_basis(m);
    CHECK(basis.size() == 7 - rank(m));
    for (const auto& v : basis)
      for (const auto& y : mat_vec(m, v)) CHECK(y.is_zero());
  }
}

TEST_CASE("zero matrix has rank 0") {
  Matrix<Rational> m(3, 3);
  CHECK(rank(m) == 0);
  CHECK(kernel_basis(m).size() == 3);
}

TEST_CASE("empty matrix allowed") {
  Matrix<Rational> m(0, 0);
  CHECK(rref(m).rank == 0);
}

TEST_CASE("prime-field rank matches rational rank on bounded integer matrices") {
  REQUIRE(PrimeField::modulus() == PrimeField::kDefaultModulus);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 30));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 30));
    auto a = random_int_matrix(rng, rows, cols, 1000);
    auto mq = from_ints(a);
    Matrix<PrimeField> mp(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mp.at(i, j) = PrimeField(a[i][j]);
    CHECK(rank(mq) == rank(mp));
  }
}
