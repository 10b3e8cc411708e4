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
#include <string>
#include <vector>

#include "socdist/free_module.hpp"
#include "socdist/groebner.hpp"
#include "socdist/matrix.hpp"
#include "socdist/parallel.hpp"
#include "socdist/point_ideal.hpp"

namespace socdist {

/// Chain of graded free modules F_0 = R, F_1, ..., F_L with differentials
/// d_k: F_k -> F_{k-1}; diff[k][r][c] is the coefficient of the r-th basis
/// element of F_{k-1} in the image of the c-th basis element of F_k.
/// Consecutive differentials compose to zero and every column is homogeneous
/// of the degree dictated by the shifts.
template <Field K>
struct Resolution {
  int nvars = 0;
  std::vector<GradedFreeModule> modules;
  std::vector<std::vector<std::vector<Poly<K>>>> diff;  // diff[0] unused
  bool minimal = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

namespace detail {

template <Field K>
std::vector<std::vector<Poly<K>>> columns_to_matrix(const std::vector<VectorPoly<K>>& cols,
                                                    int target_rank, int nvars) {
  std::vector<std::vector<Poly<K>>> m(static_cast<std::size_t>(target_rank));
  for (auto& row : m) row.assign(cols.size(), Poly<K>(nvars));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [mm, coeff] : cols[c].terms())
      m[static_cast<std::size_t>(mm.comp)][c] += Poly<K>::term(mm.m, coeff);
  return m;
}

// Deterministic arrangement of a syzygy level: group by lead component,
// descending lex on the lead monomial within a component. Keeping lead
// monomials lex-sorted is what makes the iterated construction shed
// variables and terminate.
template <Field K>
void sort_level(std::vector<VectorPoly<K>>& level) {
  std::stable_sort(level.begin(), level.end(), [](const VectorPoly<K>& a, const VectorPoly<K>& b) {
    const ModMonomial& la = a.lead_monomial();
    const ModMonomial& lb = b.lead_monomial();
    if (la.comp != lb.comp) return la.comp < lb.comp;
    return lex_compare(la.m, lb.m) == Ordering::GT;
  });
}

}  // namespace detail

/// Iterated syzygy resolution of R/<G> from a reduced Groebner basis G.
/// Position 1 is generated by G; each further level is the Schreyer basis of
/// the syzygies of the previous one, so the result is a genuine (generally
/// non-minimal) free resolution.
template <Field K>
Resolution<K> schreyer_resolution(const GroebnerBasis<K>& gb, Exec policy = Exec::parallel) {
  const int nvars = gb.nvars;
  Resolution<K> res;
  res.nvars = nvars;
  res.modules.push_back(GradedFreeModule{{0}});
  res.diff.push_back({});

  for (const auto& g : gb.gens) {
    if (g.is_zero()) throw internal_error("zero generator in resolution input");
    if (!g.is_homogeneous()) throw input_error("resolution requires homogeneous generators");
    if (g.degree() == 0) throw input_error("resolution of the unit ideal is not defined");
  }

  // current level: elements of F_{k-1} generating the image of d_k
  std::vector<VectorPoly<K>> current;
  current.reserve(gb.gens.size());
  for (const auto& g : gb.gens) current.push_back(VectorPoly<K>::from_ring_poly(g));
  detail::sort_level(current);
  SchreyerOrder parent_order = SchreyerOrder::ring(nvars);
  std::vector<int> parent_shifts{0};

  while (true) {
    std::vector<ModMonomial> leads;
    leads.reserve(current.size());
    std::vector<int> shifts;
    shifts.reserve(current.size());
    for (const auto& h : current) {
      leads.push_back(h.lead_monomial());
      shifts.push_back(h.homogeneous_degree(parent_shifts));
    }
    res.modules.push_back(GradedFreeModule{shifts});
    res.diff.push_back(detail::columns_to_matrix(current, static_cast<int>(parent_shifts.size()), nvars));

    // One syzygy per minimal generator of the per-component lead ideal of the
    // syzygy module: lt(s_ab) = (lcm/lm_a) e_a, so for fixed a only the pairs
    // whose quotient monomial is not a multiple of another kept quotient are
    // needed. The full pair set is the Taylor-complex blowup; the pruned set
    // is still a Groebner basis of the syzygies.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < current.size(); ++a) {
      std::vector<std::pair<Monomial, std::size_t>> cand;
      for (std::size_t b = a + 1; b < current.size(); ++b)
        if (leads[a].comp == leads[b].comp)
          cand.push_back({Monomial::lcm(leads[a].m, leads[b].m).divide(leads[a].m), b});
      std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
        Ordering o = grevlex_compare(x.first, y.first);
        if (o != Ordering::EQ) return o == Ordering::LT;
        return x.second < y.second;
      });
      std::vector<Monomial> kept;
      for (const auto& [m, b] : cand) {
        bool redundant = false;
        for (const auto& k : kept)
          if (k.divides(m)) {
            redundant = true;
            break;
          }
        if (redundant) continue;
        kept.push_back(m);
        pairs.push_back({a, b});
      }
    }
    if (pairs.empty()) break;
    if (res.length() > nvars + 2)
      throw internal_error("syzygy chain exceeded the variable-count bound");

    SchreyerOrder next_order = SchreyerOrder::induced(parent_order, leads);
    std::vector<VectorPoly<K>> syzygies(pairs.size());
    std::vector<std::exception_ptr> errors(pairs.size());
    parallel_for(pairs.size(), policy, [&](std::size_t pi) {
      try {
        auto [a, b] = pairs[pi];
        Monomial l = Monomial::lcm(leads[a].m, leads[b].m);
        Monomial qa = l.divide(leads[a].m);
        Monomial qb = l.divide(leads[b].m);
        K ca = current[a].lead_coeff().inv();
        K cb = current[b].lead_coeff().inv();
        VectorPoly<K> s = current[a].mul_term(qa, ca).sub(current[b].mul_term(qb, cb), parent_order);
        auto div = module_division(s, current, parent_order, nvars);
        if (!div.remainder.is_zero())
          throw internal_error("S-pair of a Schreyer basis did not reduce to zero");
        std::vector<typename VectorPoly<K>::Term> ts;
        ts.push_back({{static_cast<int>(a), qa}, ca});
        ts.push_back({{static_cast<int>(b), qb}, -cb});
        for (std::size_t c = 0; c < div.quotients.size(); ++c)
          for (const auto& [m, coeff] : div.quotients[c].terms())
            ts.push_back({{static_cast<int>(c), m}, -coeff});
        VectorPoly<K> syz = VectorPoly<K>::from_terms(std::move(ts), next_order);
        if (!(syz.lead_monomial() == ModMonomial{static_cast<int>(a), qa}))
          throw internal_error("syzygy lead term is not the expected one");
        syzygies[pi] = std::move(syz);
      } catch (...) {
        errors[pi] = std::current_exception();
      }
    });
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);

    detail::sort_level(syzygies);
    current = std::move(syzygies);
    parent_order = std::move(next_order);
    parent_shifts = res.modules.back().shifts;
  }
  return res;
}

/// Remove one unit entry at (r, c) of diff[k] and fix up the neighbours.
template <Field K>
void cancel_unit(Resolution<K>& res, int k, std::size_t r, std::size_t c) {
  auto& d = res.diff[static_cast<std::size_t>(k)];
  const K u = d[r][c].lead_coeff();
  const K uinv = u.inv();
  for (std::size_t j = 0; j < d[r].size(); ++j) {
    if (j == c || d[r][j].is_zero()) continue;
    Poly<K> f = d[r][j].scaled(uinv);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!d[i][c].is_zero()) d[i][j] -= f * d[i][c];
  }
  // drop row r and column c of d_k
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& row : d) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  // the source basis element c disappears: row c of d_{k+1} is now zero
  if (k + 1 <= res.length()) {
    auto& up = res.diff[static_cast<std::size_t>(k + 1)];
    up.erase(up.begin() + static_cast<std::ptrdiff_t>(c));
  }
  // the target basis element r disappears: column r of d_{k-1} goes with it
  if (k >= 2) {
    auto& down = res.diff[static_cast<std::size_t>(k - 1)];
    for (auto& row : down) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
  }
  auto& src = res.modules[static_cast<std::size_t>(k)].shifts;
  auto& tgt = res.modules[static_cast<std::size_t>(k - 1)].shifts;
  if (src[c] != tgt[r]) throw internal_error("unit entry between different shifts");
  src.erase(src.begin() + static_cast<std::ptrdiff_t>(c));
  tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(r));
}

/// Minimal graded free resolution by cancellation: scan from the top
/// homological position downward, repeatedly removing the nonzero constant
/// entry with the smallest (row, column) index. The graded shifts of the
/// result are canonical whatever the cancellation order.
template <Field K>
Resolution<K> minimalize(Resolution<K> res) {
  for (int k = res.length(); k >= 1; --k) {
    bool found = true;
    while (found) {
      found = false;
      auto& d = res.diff[static_cast<std::size_t>(k)];
      for (std::size_t r = 0; r < d.size() && !found; ++r)
        for (std::size_t c = 0; c < d[r].size() && !found; ++c) {
          if (d[r][c].is_zero()) continue;
          if (d[r][c].is_unit_constant()) {
            cancel_unit(res, k, r, c);
            found = true;
          }
        }
    }
  }
  while (res.length() >= 1 && res.modules.back().shifts.empty()) {
    res.modules.pop_back();
    res.diff.pop_back();
  }
  for (const auto& mod : res.modules)
    if (mod.shifts.empty()) throw internal_error("empty interior module after minimalization");
  for (int k = 1; k <= res.length(); ++k)
    for (const auto& row : res.diff[static_cast<std::size_t>(k)])
      for (const auto& e : row)
        if (e.is_unit_constant()) throw internal_error("constant entry left after minimalization");
  res.minimal = true;
  return res;
}

template <Field K>
BettiTable betti_table(const Resolution<K>& res, int ambient_dim) {
  if (!res.minimal) throw internal_error("betti_table requires a minimal resolution");
  return betti_from_shifts(res.modules, ambient_dim);
}

struct ResolutionChecks {
  bool d_squared_zero = false;
  bool exactness = false;
  bool euler = false;
  int checked_to = 0;
  std::string failure;

  bool ok() const { return d_squared_zero && exactness && euler; }
};

namespace detail {

template <Field K>
Matrix<K> graded_piece(const Resolution<K>& res, int k, int d) {
  const auto& src = res.modules[static_cast<std::size_t>(k)].shifts;
  const auto& tgt = res.modules[static_cast<std::size_t>(k - 1)].shifts;
  const auto& dm = res.diff[static_cast<std::size_t>(k)];
  int dim = res.nvars - 1;

  std::map<int, std::vector<Monomial>> mons;   // degree -> basis monomials
  std::map<int, std::map<std::vector<int>, std::size_t>> index;
  auto ensure = [&](int deg) {
    if (deg < 0 || mons.count(deg)) return;
    mons[deg] = monomials_of_degree(dim, deg);
    auto& ix = index[deg];
    for (std::size_t i = 0; i < mons[deg].size(); ++i) ix[mons[deg][i].exponents()] = i;
  };

  std::vector<std::size_t> row_offset(tgt.size() + 1, 0);
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    int deg = d - tgt[r];
    ensure(deg);
    row_offset[r + 1] = row_offset[r] + (deg < 0 ? 0 : mons[deg].size());
  }
  std::vector<std::size_t> col_offset(src.size() + 1, 0);
  for (std::size_t c = 0; c < src.size(); ++c) {
    int deg = d - src[c];
    ensure(deg);
    col_offset[c + 1] = col_offset[c] + (deg < 0 ? 0 : mons[deg].size());
  }

  Matrix<K> out(row_offset.back(), col_offset.back());
  for (std::size_t c = 0; c < src.size(); ++c) {
    int cdeg = d - src[c];
    if (cdeg < 0) continue;
    for (std::size_t mu = 0; mu < mons[cdeg].size(); ++mu) {
      std::size_t col = col_offset[c] + mu;
      for (std::size_t r = 0; r < tgt.size(); ++r) {
        if (dm[r][c].is_zero()) continue;
        int rdeg = d - tgt[r];
        if (rdeg < 0) continue;
        for (const auto& [m, coeff] : dm[r][c].terms()) {
          Monomial prod = m * mons[cdeg][mu];
          auto it = index[rdeg].find(prod.exponents());
          if (it == index[rdeg].end()) throw internal_error("inhomogeneous differential entry");
          out.at(row_offset[r] + it->second, col) += coeff;
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Checks d∘d = 0 symbolically, graded exactness by rank counts up to the
/// cap, and the Euler characteristic identity against the supplied Hilbert
/// function values.
template <Field K>
ResolutionChecks verify_resolution(const Resolution<K>& res, const HilbertTable& hf,
                                   int degree_cap, Exec policy = Exec::parallel) {
  ResolutionChecks out;
  out.checked_to = degree_cap;

  out.d_squared_zero = true;
  for (int k = 2; k <= res.length(); ++k) {
    const auto& a = res.diff[static_cast<std::size_t>(k - 1)];
    const auto& b = res.diff[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < a.size() && out.d_squared_zero; ++i)
      for (std::size_t j = 0; j < b[0].size() && out.d_squared_zero; ++j) {
        Poly<K> acc(res.nvars);
        for (std::size_t t = 0; t < b.size(); ++t)
          if (!a[i][t].is_zero() && !b[t][j].is_zero()) acc += a[i][t] * b[t][j];
        if (!acc.is_zero()) {
          out.d_squared_zero = false;
          out.failure = "d∘d != 0 at level " + std::to_string(k) + " entry (" + std::to_string(i) +
                        "," + std::to_string(j) + ")";
        }
      }
  }

  int n = res.nvars - 1;
  out.exactness = true;
  std::vector<std::vector<std::size_t>> ranks(static_cast<std::size_t>(res.length()) + 2);
  for (auto& v : ranks) v.assign(static_cast<std::size_t>(degree_cap) + 1, 0);
  {
    std::vector<std::pair<int, int>> jobs;
    for (int k = 1; k <= res.length(); ++k)
      for (int d = 0; d <= degree_cap; ++d) jobs.push_back({k, d});
    std::vector<std::exception_ptr> errors(jobs.size());
    parallel_for(jobs.size(), policy, [&](std::size_t idx) {
      try {
        auto [k, d] = jobs[idx];
        ranks[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] =
            rank(detail::graded_piece(res, k, d));
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    });
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (int d = 0; d <= degree_cap && out.exactness; ++d) {
    for (int k = 1; k <= res.length() && out.exactness; ++k) {
      long dim_k = 0;
      for (int s : res.modules[static_cast<std::size_t>(k)].shifts)
        dim_k += static_cast<long>(binomial(n + d - s, n));
      long kernel = dim_k - static_cast<long>(ranks[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)]);
      long image = k + 1 <= res.length()
                       ? static_cast<long>(ranks[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(d)])
                       : 0;
      if (kernel != image) {
        out.exactness = false;
        out.failure = "exactness fails at position " + std::to_string(k) + " in degree " +
                      std::to_string(d);
      }
    }
    if (!out.exactness) break;
    long coker = static_cast<long>(binomial(n + d, n)) -
                 static_cast<long>(ranks[1][static_cast<std::size_t>(d)]);
    if (coker != hf.value(d)) {
      out.exactness = false;
      out.failure = "cokernel dimension disagrees with the Hilbert function in degree " +
                    std::to_string(d);
    }
  }

  out.euler = true;
  for (int d = 0; d <= degree_cap && out.euler; ++d) {
    long acc = 0;
    for (std::size_t i = 0; i < res.modules.size(); ++i) {
      long dim = 0;
      for (int s : res.modules[i].shifts) dim += static_cast<long>(binomial(n + d - s, n));
      acc += (i % 2 == 0 ? dim : -dim);
    }
    if (acc != hf.value(d)) {
      out.euler = false;
      out.failure = "Euler characteristic identity fails in degree " + std::to_string(d);
    }
  }
  return out;
}

}  // namespace socdist
