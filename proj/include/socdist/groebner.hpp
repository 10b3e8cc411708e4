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

#include <algorithm>
#include <vector>

#include "socdist/poly.hpp"

namespace socdist {

/// Reduced Groebner basis under grevlex: generators are monic, no term of
/// any generator is divisible by another generator's lead monomial, and the
/// list is sorted by ascending lead monomial (canonical presentation).
template <Field K>
struct GroebnerBasis {
  int nvars = 0;
  std::vector<Poly<K>> gens;

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> ls;
    ls.reserve(gens.size());
    for (const auto& g : gens) ls.push_back(g.lead_monomial());
    return ls;
  }
};

template <Field K>
struct DivisionResult {
  std::vector<Poly<K>> quotients;  // one per divisor, f = sum q_i g_i + remainder
  Poly<K> remainder;
};

/// Multivariate division: the reducer is always the first divisor (in list
/// order) whose lead monomial divides the current lead term.
template <Field K>
DivisionResult<K> division(Poly<K> f, const std::vector<Poly<K>>& divisors) {
  DivisionResult<K> out;
  out.quotients.assign(divisors.size(), Poly<K>(f.nvars()));
  out.remainder = Poly<K>(f.nvars());
  while (!f.is_zero()) {
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero()) continue;
      if (!divisors[i].lead_monomial().divides(f.lead_monomial())) continue;
      Monomial q = f.lead_monomial().divide(divisors[i].lead_monomial());
      K c = f.lead_coeff() / divisors[i].lead_coeff();
      out.quotients[i] += Poly<K>::term(q, c);
      f -= divisors[i].mul_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Poly<K> lt = Poly<K>::term(f.lead_monomial(), f.lead_coeff());
      out.remainder += lt;
      f -= lt;
    }
  }
  return out;
}

template <Field K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& divisors) {
  return division(f, divisors).remainder;
}

template <Field K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
  return division(f, gb.gens).remainder;
}

template <Field K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) {
  Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  return f.mul_term(l.divide(f.lead_monomial()), f.lead_coeff().inv()) -
         g.mul_term(l.divide(g.lead_monomial()), g.lead_coeff().inv());
}

/// Interreduce a Groebner basis into the unique reduced form: drop elements
/// whose lead is divisible by another lead, tail-reduce the survivors, make
/// them monic, sort by ascending lead monomial.
template <Field K>
std::vector<Poly<K>> interreduce(std::vector<Poly<K>> polys) {
  std::erase_if(polys, [](const Poly<K>& p) { return p.is_zero(); });
  std::vector<bool> dropped(polys.size(), false);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j || dropped[i] || dropped[j]) continue;
      const Monomial& li = polys[i].lead_monomial();
      const Monomial& lj = polys[j].lead_monomial();
      if (lj.divides(li) && (li != lj || j < i)) {
        dropped[i] = true;
        break;
      }
    }
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!dropped[i]) minimal.push_back(polys[i].monic());

  std::vector<Poly<K>> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly<K>& a, const Poly<K>& b) {
    return grevlex_less(a.lead_monomial(), b.lead_monomial());
  });
  return reduced;
}

namespace detail {

struct SPair {
  std::size_t i, j;
  Monomial lcm;
};

// Gebauer-Moeller update of the pair set when generator `t` joins the basis.
template <Field K>
void update_pairs(std::vector<SPair>& pairs, const std::vector<Poly<K>>& basis, std::size_t t) {
  const Monomial& lt = basis[t].lead_monomial();
  std::vector<SPair> cand;
  cand.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    cand.push_back({i, t, Monomial::lcm(basis[i].lead_monomial(), lt)});

  // M criterion: drop (i,t) when another candidate's lcm strictly divides its lcm.
  std::vector<bool> keep(cand.size(), true);
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (a == b || !keep[a] || !keep[b]) continue;
      if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
        keep[a] = false;
        break;
      }
    }
  // F criterion: one candidate per lcm value.
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      if (!keep[a] || !keep[b]) continue;
      if (cand[a].lcm == cand[b].lcm) keep[a] = false;
    }
  // B criterion: coprime lead monomials reduce to zero.
  for (std::size_t a = 0; a < cand.size(); ++a)
    if (keep[a] && basis[cand[a].i].lead_monomial().coprime(lt)) keep[a] = false;

  // prune old pairs now covered through t
  std::erase_if(pairs, [&](const SPair& p) {
    if (!lt.divides(p.lcm)) return false;
    return Monomial::lcm(basis[p.i].lead_monomial(), lt) != p.lcm &&
           Monomial::lcm(basis[p.j].lead_monomial(), lt) != p.lcm;
  });
  for (std::size_t a = 0; a < cand.size(); ++a)
    if (keep[a]) pairs.push_back(std::move(cand[a]));
}

inline bool pair_before(const SPair& a, const SPair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  Ordering o = grevlex_compare(a.lcm, b.lcm);
  if (o != Ordering::EQ) return o == Ordering::LT;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace detail

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and normal
/// selection (smallest lcm first). Returns the unique reduced basis, so the
/// result does not depend on the presentation of the input generators.
template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input, int nvars) {
  std::vector<Poly<K>> basis;
  std::vector<detail::SPair> pairs;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    Poly<K> r = normal_form(f, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    detail::update_pairs(pairs, basis, basis.size() - 1);
  }
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), detail::pair_before);
    detail::SPair p = *best;
    pairs.erase(best);
    Poly<K> r = normal_form(spoly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    detail::update_pairs(pairs, basis, basis.size() - 1);
  }
  GroebnerBasis<K> gb;
  gb.nvars = nvars;
  gb.gens = interreduce(std::move(basis));
  return gb;
}

template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input) {
  if (input.empty()) throw internal_error("buchberger on empty generator list");
  return buchberger(input, input.front().nvars());
}

/// Degree-d dimension of R/<G>: the number of degree-d monomials not
/// divisible by any lead monomial of G.
template <Field K>
int hilbert_function_gb(const GroebnerBasis<K>& gb, int d) {
  auto leads = gb.lead_monomials();
  int count = 0;
  for (const auto& m : monomials_of_degree(gb.nvars - 1, d)) {
    bool divisible = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace socdist
