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

#include "socdist/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "socdist/field.hpp"

namespace socdist {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  deg_ = 0;
  for (int x : e_) {
    if (x < 0) throw internal_error("negative exponent");
    deg_ += x;
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars()) throw internal_error("monomial variable-count mismatch");
  std::vector<int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw internal_error("monomial variable-count mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& by) const {
  if (!by.divides(*this)) throw internal_error("inexact monomial division");
  std::vector<int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= by.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw internal_error("monomial variable-count mismatch");
  std::vector<int> e(a.e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw internal_error("monomial variable-count mismatch");
  std::vector<int> e(a.e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  if (nvars() != o.nvars()) throw internal_error("monomial variable-count mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::drop_var(int var) const {
  if (e_[static_cast<std::size_t>(var)] != 0) throw internal_error("dropping a live variable");
  std::vector<int> e;
  e.reserve(e_.size() - 1);
  for (int i = 0; i < nvars(); ++i)
    if (i != var) e.push_back(e_[static_cast<std::size_t>(i)]);
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (deg_ == 0) return "1";
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    int e = e_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw internal_error("comparing monomials in different rings");
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? Ordering::GT : Ordering::LT;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

Ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw internal_error("comparing monomials in different rings");
  for (int i = 0; i < a.nvars(); ++i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

namespace {

void enumerate(int nvars, int slot, int remaining, std::vector<int>& acc,
               std::vector<Monomial>& out) {
  if (slot == nvars - 1) {
    acc[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(Monomial(acc));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    acc[static_cast<std::size_t>(slot)] = e;
    enumerate(nvars, slot + 1, remaining - e, acc, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int dim, int d) {
  if (d < 0) throw internal_error("negative degree");
  int nvars = dim + 1;
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(dim + d, d)));
  std::vector<int> acc(static_cast<std::size_t>(nvars), 0);
  enumerate(nvars, 0, d, acc, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
  return out;
}

unsigned long long binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i);
    r /= static_cast<unsigned long long>(i);
  }
  return r;
}

}  // namespace socdist
