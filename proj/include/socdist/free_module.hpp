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

#include <utility>
#include <vector>

#include "socdist/betti.hpp"
#include "socdist/poly.hpp"

namespace socdist {

/// Monomial of a free module: a ring monomial sitting in one basis component.
struct ModMonomial {
  int comp = 0;
  Monomial m;

  bool operator==(const ModMonomial& o) const { return comp == o.comp && m == o.m; }
};

/// Schreyer order data for a free module in an iterated syzygy chain.
///
/// Each basis element carries the flattened ring monomial lambda (the product
/// of the lead monomials down the chain) and the list of ancestor components.
/// Comparison is grevlex on m_a*lambda_a vs m_b*lambda_b; ties follow the
/// ancestor chains from the bottom level up (smaller component first), then
/// the position. This is the order induced level by level, which is what the
/// syzygy-basis theorem needs; a flat position-only tie-break is not.
class SchreyerOrder {
 public:
  /// Order data for F_0 = R viewed as a rank-1 free module.
  static SchreyerOrder ring(int nvars) {
    SchreyerOrder o;
    o.nvars_ = nvars;
    o.lambda_.push_back(Monomial::one(nvars));
    o.chain_.push_back({});
    return o;
  }

  /// Order on the free module whose basis maps onto elements with the given
  /// lead monomials inside the parent module.
  static SchreyerOrder induced(const SchreyerOrder& parent, const std::vector<ModMonomial>& leads) {
    SchreyerOrder o;
    o.nvars_ = parent.nvars_;
    o.lambda_.reserve(leads.size());
    o.chain_.reserve(leads.size());
    for (const auto& l : leads) {
      o.lambda_.push_back(l.m * parent.lambda_[static_cast<std::size_t>(l.comp)]);
      std::vector<int> chain = parent.chain_[static_cast<std::size_t>(l.comp)];
      chain.push_back(l.comp);
      o.chain_.push_back(std::move(chain));
    }
    return o;
  }

  int rank() const { return static_cast<int>(lambda_.size()); }

  Ordering compare(const ModMonomial& a, const ModMonomial& b) const {
    Ordering flat = grevlex_compare(a.m * lambda_[static_cast<std::size_t>(a.comp)],
                                    b.m * lambda_[static_cast<std::size_t>(b.comp)]);
    if (flat != Ordering::EQ) return flat;
    const auto& ca = chain_[static_cast<std::size_t>(a.comp)];
    const auto& cb = chain_[static_cast<std::size_t>(b.comp)];
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] != cb[i]) return ca[i] < cb[i] ? Ordering::GT : Ordering::LT;
    }
    if (a.comp != b.comp) return a.comp < b.comp ? Ordering::GT : Ordering::LT;
    return Ordering::EQ;
  }

  bool greater(const ModMonomial& a, const ModMonomial& b) const {
    return compare(a, b) == Ordering::GT;
  }

 private:
  int nvars_ = 0;
  std::vector<Monomial> lambda_;
  std::vector<std::vector<int>> chain_;
};

/// Element of a graded free module, stored as module terms in descending
/// order under the module's SchreyerOrder.
template <Field K>
class VectorPoly {
 public:
  using Term = std::pair<ModMonomial, K>;

  VectorPoly() = default;

  static VectorPoly from_ring_poly(const Poly<K>& p, int comp = 0) {
    VectorPoly v;
    v.terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) v.terms_.push_back({{comp, m}, c});
    return v;  // ring order within one component agrees with any module order
  }

  static VectorPoly from_terms(std::vector<Term> ts, const SchreyerOrder& ord) {
    std::sort(ts.begin(), ts.end(),
              [&ord](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    VectorPoly v;
    for (auto& t : ts) {
      if (t.second.is_zero()) continue;
      if (!v.terms_.empty() && v.terms_.back().first == t.first)
        throw internal_error("duplicate module monomial in from_terms");
      v.terms_.push_back(std::move(t));
    }
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  const ModMonomial& lead_monomial() const {
    if (is_zero()) throw internal_error("lead of zero module element");
    return terms_.front().first;
  }
  const K& lead_coeff() const {
    if (is_zero()) throw internal_error("lead of zero module element");
    return terms_.front().second;
  }

  VectorPoly scaled(const K& c) const {
    VectorPoly v;
    if (c.is_zero()) return v;
    v.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) v.terms_.push_back({m, k * c});
    return v;
  }

  VectorPoly mul_term(const Monomial& mono, const K& c) const {
    VectorPoly v;
    if (c.is_zero()) return v;
    v.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) v.terms_.push_back({{m.comp, m.m * mono}, k * c});
    return v;  // multiplying by a ring monomial preserves the module order
  }

  VectorPoly sub(const VectorPoly& o, const SchreyerOrder& ord) const {
    VectorPoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      Ordering c = ord.compare(terms_[i].first, o.terms_[j].first);
      if (c == Ordering::GT) {
        out.terms_.push_back(terms_[i++]);
      } else if (c == Ordering::LT) {
        out.terms_.push_back({o.terms_[j].first, -o.terms_[j].second});
        ++j;
      } else {
        K v = terms_[i].second - o.terms_[j].second;
        if (!v.is_zero()) out.terms_.push_back({terms_[i].first, v});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back({o.terms_[j].first, -o.terms_[j].second});
    return out;
  }

  /// Internal degree of a homogeneous element given the module shifts;
  /// throws if the element is not homogeneous.
  int homogeneous_degree(const std::vector<int>& shifts) const {
    if (is_zero()) throw internal_error("degree of zero module element");
    int d = terms_[0].first.m.degree() + shifts[static_cast<std::size_t>(terms_[0].first.comp)];
    for (const auto& [m, c] : terms_)
      if (m.m.degree() + shifts[static_cast<std::size_t>(m.comp)] != d)
        throw internal_error("module element is not homogeneous");
    return d;
  }

  /// Component as a ring polynomial.
  Poly<K> component(int comp, int nvars) const {
    std::vector<typename Poly<K>::Term> ts;
    for (const auto& [m, c] : terms_)
      if (m.comp == comp) ts.push_back({m.m, c});
    return Poly<K>::from_terms(nvars, std::move(ts));
  }

 private:
  std::vector<Term> terms_;
};

template <Field K>
struct ModuleDivision {
  std::vector<Poly<K>> quotients;
  VectorPoly<K> remainder;
};

/// Division in a free module: the reducer is the first basis element whose
/// lead module monomial divides the current lead (same component, dividing
/// ring monomial).
template <Field K>
ModuleDivision<K> module_division(VectorPoly<K> f, const std::vector<VectorPoly<K>>& basis,
                                  const SchreyerOrder& ord, int nvars) {
  ModuleDivision<K> out;
  out.quotients.assign(basis.size(), Poly<K>(nvars));
  while (!f.is_zero()) {
    const ModMonomial& lm = f.lead_monomial();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const ModMonomial& bl = basis[i].lead_monomial();
      if (bl.comp != lm.comp || !bl.m.divides(lm.m)) continue;
      Monomial q = lm.m.divide(bl.m);
      K c = f.lead_coeff() / basis[i].lead_coeff();
      out.quotients[i] += Poly<K>::term(q, c);
      f = f.sub(basis[i].mul_term(q, c), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      VectorPoly<K> lt = VectorPoly<K>::from_terms({{lm, f.lead_coeff()}}, ord);
      out.remainder = out.remainder.sub(lt.scaled(K::from_int(-1)), ord);
      f = f.sub(lt, ord);
    }
  }
  return out;
}

}  // namespace socdist
