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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socdist/field.hpp"
#include "socdist/monomial.hpp"

namespace socdist {

/// Sparse multivariate polynomial. Terms are kept in descending grevlex
/// order with no zero coefficients, so the leading term is terms().front().
template <Field K>
class Poly {
 public:
  using Term = std::pair<Monomial, K>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const K& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(nvars), c});
    return p;
  }
  static Poly term(const Monomial& m, const K& c) {
    Poly p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Poly variable(int nvars, int i) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return term(Monomial(std::move(e)), K::from_int(1));
  }

  /// Build from arbitrary (monomial, coefficient) pairs; merges duplicates.
  static Poly from_terms(int nvars, std::vector<Term> ts) {
    std::map<Monomial, K, decltype(&grevlex_less)> acc(&grevlex_less);
    for (auto& [m, c] : ts) {
      if (m.nvars() != nvars) throw internal_error("term in wrong ring");
      acc[m] += c;
    }
    Poly p(nvars);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& lead_monomial() const {
    if (is_zero()) throw internal_error("lead term of zero polynomial");
    return terms_.front().first;
  }
  const K& lead_coeff() const {
    if (is_zero()) throw internal_error("lead term of zero polynomial");
    return terms_.front().second;
  }

  int degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != terms_.front().first.degree()) return false;
    return true;
  }

  /// True when the polynomial is a nonzero constant.
  bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].first.is_one(); }

  Poly operator-() const {
    Poly p(nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) p.terms_.push_back({m, -c});
    return p;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

  Poly scaled(const K& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly p(nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) p.terms_.push_back({m, k * c});
    return p;
  }

  /// Multiply by a single term c * mono.
  Poly mul_term(const Monomial& mono, const K& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly p(nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) p.terms_.push_back({m * mono, k * c});
    return p;  // multiplying by a fixed monomial preserves the term order
  }

  Poly operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw internal_error("product across rings");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) acc.push_back({m1 * m2, c1 * c2});
    return from_terms(nvars_, std::move(acc));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coeff().inv());
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw internal_error("evaluation arity mismatch");
    K acc;
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m.exp(i); ++e) t *= point[static_cast<std::size_t>(i)];
      acc += t;
    }
    return acc;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Rendering grammar: terms in descending grevlex order joined by " + " /
  /// " - "; coefficient omitted when 1, printed as "p/q" otherwise;
  /// monomials as "x0^2*x1"; the zero polynomial is "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      K a = c;
      if (first) {
        if (a.sign() < 0) {
          s += "-";
          a = -a;
        }
      } else {
        bool neg = a.sign() < 0;
        s += neg ? " - " : " + ";
        if (neg) a = -a;
      }
      if (m.is_one()) {
        s += a.str();
      } else if (a.is_one()) {
        s += m.str();
      } else {
        s += a.str() + "*" + m.str();
      }
      first = false;
    }
    return s;
  }

 private:
  Poly merged(const Poly& o, bool subtract) const {
    if (nvars_ != o.nvars_) throw internal_error("sum across rings");
    Poly out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      Ordering ord = grevlex_compare(terms_[i].first, o.terms_[j].first);
      if (ord == Ordering::GT) {
        out.terms_.push_back(terms_[i++]);
      } else if (ord == Ordering::LT) {
        const auto& [m, c] = o.terms_[j++];
        out.terms_.push_back({m, subtract ? -c : c});
      } else {
        K c = subtract ? terms_[i].second - o.terms_[j].second
                       : terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) out.terms_.push_back({terms_[i].first, c});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& [m, c] = o.terms_[j];
      out.terms_.push_back({m, subtract ? -c : c});
    }
    return out;
  }

  int nvars_;
  std::vector<Term> terms_;
};

/// Substitute variable `var` by the polynomial `value` (in the same ring),
/// e.g. for the linear change of coordinates in the Artinian reduction.
template <Field K>
Poly<K> substitute(const Poly<K>& f, int var, const Poly<K>& value) {
  int n = f.nvars();
  std::vector<Poly<K>> powers{Poly<K>::constant(n, K::from_int(1))};
  Poly<K> out(n);
  for (const auto& [m, c] : f.terms()) {
    int e = m.exp(var);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    std::vector<int> rest = m.exponents();
    rest[static_cast<std::size_t>(var)] = 0;
    out += powers[static_cast<std::size_t>(e)].mul_term(Monomial(std::move(rest)), c);
  }
  return out;
}

/// Rename away an unused variable slot, mapping K[x0..xn] -> K[x0..x{n-1}].
template <Field K>
Poly<K> drop_variable(const Poly<K>& f, int var) {
  std::vector<typename Poly<K>::Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) ts.push_back({m.drop_var(var), c});
  return Poly<K>::from_terms(f.nvars() - 1, std::move(ts));
}

}  // namespace socdist
