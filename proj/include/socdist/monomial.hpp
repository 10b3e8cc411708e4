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
#include <string>
#include <vector>

namespace socdist {

enum class Ordering { LT, EQ, GT };

/// Power product of the variables x0..x{nvars-1}. The total degree is cached.
class Monomial {
 public:
  Monomial() : deg_(0) {}
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// Exact quotient; requires `by.divides(*this)`.
  Monomial divide(const Monomial& by) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  /// Erase variable slot `var` (exponent must be 0), producing a monomial in
  /// one fewer variable.
  Monomial drop_var(int var) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  std::string str() const;  // "x0^2*x1", "1" for the unit

 private:
  std::vector<int> e_;
  int deg_;
};

/// Graded reverse lexicographic comparison with x0 > x1 > ... > xn:
/// higher degree wins; on equal degree the last nonzero entry of a - b
/// negative means a > b. Throws on variable-count mismatch.
Ordering grevlex_compare(const Monomial& a, const Monomial& b);

/// Plain lexicographic comparison (x0 > x1 > ...); used for deterministic
/// generator arrangement, not as the computation order.
Ordering lex_compare(const Monomial& a, const Monomial& b);

inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return grevlex_compare(a, b) == Ordering::GT;
}
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  return grevlex_compare(a, b) == Ordering::LT;
}

/// All C(dim + d, d) monomials of degree d in dim + 1 variables, in
/// descending grevlex order.
std::vector<Monomial> monomials_of_degree(int dim, int d);

/// Exact binomial coefficient; returns 0 when k < 0 or k > n.
unsigned long long binomial(long long n, long long k);

}  // namespace socdist
