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

#include "socdist/groebner.hpp"
#include "socdist/matrix.hpp"
#include "socdist/parallel.hpp"
#include "socdist/points.hpp"

namespace socdist {

inline constexpr int kDefaultDegreeCap = 30;

/// Hilbert function of R/I for a point ideal: weakly increasing, stabilizing
/// at exactly m = |Γ|. Values beyond the stored table equal m.
struct HilbertTable {
  std::vector<int> values;
  int stabilized_at = 0;  // first degree where the value reaches m
  int m = 0;

  int value(int d) const {
    if (d < 0) return 0;
    if (d < static_cast<int>(values.size())) return values[static_cast<std::size_t>(d)];
    return m;
  }
};

template <Field K>
struct PointIdeal {
  GroebnerBasis<K> gb;
  HilbertTable hf;
};

/// m x C(n+d, n) matrix of the degree-d monomials evaluated at the points
/// (rows = points, columns = monomials in descending grevlex order).
template <Field K>
Matrix<K> evaluation_matrix(const PointSet<K>& ps, int d, Exec policy = Exec::parallel) {
  auto mons = monomials_of_degree(ps.dim, d);
  Matrix<K> e(static_cast<std::size_t>(ps.m()), mons.size());
  parallel_for(static_cast<std::size_t>(ps.m()), policy, [&](std::size_t i) {
    std::span<const K> pt(ps.points[i]);
    for (std::size_t j = 0; j < mons.size(); ++j) {
      K v = K::from_int(1);
      for (int var = 0; var < ps.nvars(); ++var)
        for (int rep = 0; rep < mons[j].exp(var); ++rep) v *= pt[static_cast<std::size_t>(var)];
      e.at(i, j) = v;
    }
  });
  return e;
}

/// HF(R/I(Γ), d) as the rank of the degree-d evaluation matrix. This is the
/// linear-algebra route, independent of any Groebner computation.
template <Field K>
int hilbert_function_eval(const PointSet<K>& ps, int d, Exec policy = Exec::parallel) {
  if (d == 0) return ps.m() > 0 ? 1 : 0;
  return static_cast<int>(rank(evaluation_matrix(ps, d, policy)));
}

namespace detail {

template <Field K>
std::vector<K> eval_vector(const PointSet<K>& ps, const Monomial& mono) {
  std::vector<K> v(static_cast<std::size_t>(ps.m()));
  for (int i = 0; i < ps.m(); ++i) {
    K x = K::from_int(1);
    for (int var = 0; var < ps.nvars(); ++var)
      for (int rep = 0; rep < mono.exp(var); ++rep)
        x *= ps.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(var)];
    v[static_cast<std::size_t>(i)] = x;
  }
  return v;
}

template <Field K>
struct BmRow {
  std::vector<K> vec;       // reduced evaluation vector, pivot normalized to 1
  std::size_t pivot;
  Poly<K> combo;            // combination of standard monomials with vec = eval(combo)
};

// Eliminate one degree: candidates are the degree-d monomials not divisible
// by any known lead, processed in ascending grevlex order. A candidate whose
// evaluation vector is dependent on the accepted ones yields a new reduced
// generator; otherwise it joins the standard monomials.
template <Field K>
void bm_eliminate_degree(const PointSet<K>& ps, int d, std::vector<Poly<K>>& gens,
                         std::vector<Monomial>& leads, std::vector<int>& hf_values) {
  auto mons = monomials_of_degree(ps.dim, d);
  std::reverse(mons.begin(), mons.end());  // ascending
  std::vector<BmRow<K>> rows;
  int standard = 0;
  for (const auto& t : mons) {
    bool skip = false;
    for (const auto& l : leads)
      if (l.divides(t)) {
        skip = true;
        break;
      }
    if (skip) continue;
    std::vector<K> v = eval_vector(ps, t);
    Poly<K> combo = Poly<K>::term(t, K::from_int(1));
    // rows are kept mutually reduced (zero at each other's pivots), so one
    // pass eliminates every pivot for good
    for (const auto& row : rows) {
      const K c = v[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!row.vec[k].is_zero()) v[k] -= c * row.vec[k];
      combo -= row.combo.scaled(c);
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) {
      gens.push_back(combo);  // lead monomial is t: earlier standards are smaller
      leads.push_back(t);
      if (combo.lead_monomial() != t) throw internal_error("buchberger-moeller lead mismatch");
    } else {
      K inv = v[pivot].inv();
      for (auto& x : v)
        if (!x.is_zero()) x *= inv;
      Poly<K> canon = combo.scaled(inv);
      for (auto& row : rows) {
        const K c = row.vec[pivot];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!v[k].is_zero()) row.vec[k] -= c * v[k];
        row.combo -= canon.scaled(c);
      }
      rows.push_back({std::move(v), pivot, std::move(canon)});
      ++standard;
    }
  }
  hf_values.push_back(standard);
}

inline int count_standard(const std::vector<Monomial>& leads, int dim, int d) {
  int count = 0;
  for (const auto& m : monomials_of_degree(dim, d)) {
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

}  // namespace detail

/// Buchberger-Moeller: the reduced grevlex Groebner basis of the saturated
/// homogeneous vanishing ideal I(Γ), computed degree by degree together with
/// the Hilbert function. Elimination runs two degrees past HF stabilization;
/// a standard-monomial count through degree max(stabilization+2, m) then
/// certifies completeness (by Macaulay growth, a monomial quotient that sits
/// at m points from degree m onward stays there).
template <Field K>
PointIdeal<K> buchberger_moeller(const PointSet<K>& ps, int degree_cap = kDefaultDegreeCap) {
  if (ps.m() == 0) throw input_error("empty point set");
  const int m = ps.m();
  std::vector<Poly<K>> gens;
  std::vector<Monomial> leads;
  std::vector<int> hf_values;
  int sigma = -1;
  int d = 0;
  while (true) {
    detail::bm_eliminate_degree(ps, d, gens, leads, hf_values);
    if (sigma < 0 && hf_values.back() == m) sigma = d;
    if (sigma >= 0 && d >= sigma + 2) break;
    ++d;
    if (d > degree_cap)
      throw cap_error("degree cap " + std::to_string(degree_cap) +
                      " exceeded in buchberger_moeller (configure --max-degree to raise)");
  }
  int certify_to = std::max(d, m);
  for (int dd = d + 1; dd <= certify_to; ++dd) {
    if (detail::count_standard(leads, ps.dim, dd) == m) continue;
    // lead ideal not yet saturated at this degree: resume elimination
    while (d < dd) {
      ++d;
      if (d > degree_cap)
        throw cap_error("degree cap " + std::to_string(degree_cap) +
                        " exceeded while saturating the vanishing ideal");
      detail::bm_eliminate_degree(ps, d, gens, leads, hf_values);
    }
  }

  PointIdeal<K> out;
  out.gb.nvars = ps.nvars();
  out.gb.gens = interreduce(std::move(gens));
  out.hf.values = std::move(hf_values);
  out.hf.stabilized_at = sigma;
  out.hf.m = m;
  return out;
}

/// Hilbert table from the GB route, cross-checkable against
/// hilbert_function_eval.
template <Field K>
HilbertTable hilbert_table_gb(const GroebnerBasis<K>& gb, int m, int degree_cap = kDefaultDegreeCap) {
  HilbertTable t;
  t.m = m;
  int sigma = -1;
  for (int d = 0;; ++d) {
    int v = hilbert_function_gb(gb, d);
    t.values.push_back(v);
    if (sigma < 0 && v == m) sigma = d;
    if (sigma >= 0 && d >= sigma + 2) break;
    if (d > degree_cap) throw cap_error("degree cap exceeded while tabulating the Hilbert function");
  }
  t.stabilized_at = sigma;
  return t;
}

}  // namespace socdist
