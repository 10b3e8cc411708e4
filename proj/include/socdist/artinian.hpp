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
#include <cstdlib>
#include <vector>

#include "socdist/matrix.hpp"
#include "socdist/point_ideal.hpp"
#include "socdist/prng.hpp"

namespace socdist {

/// The sampled linear form vanished at a point of Γ: resample.
class nonzerodivisor_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quotient by a general linear form, presented in one fewer variable.
/// Graded piece dimensions are the first difference of HF(R/I).
template <Field K>
struct ArtinianAlgebra {
  int nvars = 0;  // variables of the reduced ring (= ambient projective dim)
  GroebnerBasis<K> ideal;
  std::vector<std::vector<Monomial>> graded_basis;  // per degree, ascending grevlex
  int top_degree = 0;
  int total_dimension = 0;
};

/// R/(I + <ell>) in n variables: substitute away the variable with the
/// largest-magnitude ell coefficient. ell must not vanish at any point.
template <Field K>
ArtinianAlgebra<K> artinian_reduce(const PointSet<K>& ps, const GroebnerBasis<K>& gb,
                                   const std::vector<long long>& ell,
                                   int degree_cap = kDefaultDegreeCap) {
  if (static_cast<int>(ell.size()) != ps.nvars())
    throw internal_error("linear form has the wrong number of coefficients");
  std::vector<K> ellf;
  ellf.reserve(ell.size());
  for (long long c : ell) ellf.push_back(K::from_int(c));
  for (int i = 0; i < ps.m(); ++i) {
    K v;
    for (int j = 0; j < ps.nvars(); ++j)
      v += ellf[static_cast<std::size_t>(j)] *
           ps.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (v.is_zero())
      throw nonzerodivisor_error("linear form vanishes at point " + std::to_string(i));
  }

  int k = 0;
  for (std::size_t i = 1; i < ell.size(); ++i)
    if (std::llabs(ell[i]) > std::llabs(ell[static_cast<std::size_t>(k)])) k = static_cast<int>(i);
  if (ell[static_cast<std::size_t>(k)] == 0)
    throw nonzerodivisor_error("zero linear form");

  // x_k := -(1/c_k) * sum_{i != k} c_i x_i
  const int nv = ps.nvars();
  Poly<K> repl(nv);
  K inv = -ellf[static_cast<std::size_t>(k)].inv();
  for (int i = 0; i < nv; ++i) {
    if (i == k || ell[static_cast<std::size_t>(i)] == 0) continue;
    repl += Poly<K>::variable(nv, i).scaled(ellf[static_cast<std::size_t>(i)] * inv);
  }
  std::vector<Poly<K>> reduced_gens;
  reduced_gens.reserve(gb.gens.size());
  for (const auto& g : gb.gens) {
    Poly<K> s = drop_variable(substitute(g, k, repl), k);
    if (!s.is_zero()) reduced_gens.push_back(s);
  }

  ArtinianAlgebra<K> out;
  out.nvars = nv - 1;
  out.ideal = reduced_gens.empty() ? GroebnerBasis<K>{nv - 1, {}} : buchberger(reduced_gens, nv - 1);

  auto leads = out.ideal.lead_monomials();
  for (int d = 0;; ++d) {
    std::vector<Monomial> basis;
    auto mons = monomials_of_degree(out.nvars - 1, d);
    std::reverse(mons.begin(), mons.end());  // ascending
    for (const auto& m : mons) {
      bool divisible = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) basis.push_back(m);
    }
    if (basis.empty()) break;
    out.total_dimension += static_cast<int>(basis.size());
    out.graded_basis.push_back(std::move(basis));
    if (d > degree_cap) throw cap_error("quotient by the linear form is not Artinian up to the degree cap");
  }
  out.top_degree = static_cast<int>(out.graded_basis.size()) - 1;
  if (out.top_degree < 0) throw internal_error("empty Artinian algebra");
  return out;
}

/// Socle degrees with multiplicity: per degree i, the dimension of the
/// intersection over all variables of ker(x_v : A_i -> A_{i+1}).
template <Field K>
std::vector<int> socle_degrees(const ArtinianAlgebra<K>& alg) {
  std::vector<int> out;
  for (int d = 0; d <= alg.top_degree; ++d) {
    const auto& basis = alg.graded_basis[static_cast<std::size_t>(d)];
    std::size_t dim_d = basis.size();
    std::size_t dim_up =
        d + 1 <= alg.top_degree ? alg.graded_basis[static_cast<std::size_t>(d + 1)].size() : 0;

    // stacked multiplication maps, one block per variable
    Matrix<K> stacked(static_cast<std::size_t>(alg.nvars) * dim_up, dim_d);
    if (dim_up > 0) {
      const auto& up = alg.graded_basis[static_cast<std::size_t>(d + 1)];
      for (int v = 0; v < alg.nvars; ++v) {
        for (std::size_t j = 0; j < dim_d; ++j) {
          Poly<K> prod = Poly<K>::term(basis[j], K::from_int(1)) * Poly<K>::variable(alg.nvars, v);
          Poly<K> nf = normal_form(prod, alg.ideal);
          for (const auto& [mono, coeff] : nf.terms()) {
            auto it = std::find(up.begin(), up.end(), mono);
            if (it == up.end()) throw internal_error("normal form outside the standard basis");
            std::size_t row = static_cast<std::size_t>(v) * dim_up +
                              static_cast<std::size_t>(it - up.begin());
            stacked.at(row, j) = coeff;
          }
        }
      }
    }
    std::size_t socle_dim = dim_d - rank(stacked);
    for (std::size_t i = 0; i < socle_dim; ++i) out.push_back(d);
  }
  return out;
}

template <Field K>
struct SocleOracleResult {
  int min_socle_degree = 0;        // A_n, computed without any free resolution
  std::vector<int> socle_multiset; // sorted ascending
  int attempts = 0;
  std::vector<long long> ell;
};

inline constexpr int kEllCoefficientBound = 20;
inline constexpr int kEllMaxAttempts = 50;

/// A_n through Buchberger-Moeller + Artinian reduction by a seeded random
/// linear form + socle kernels. Deterministic given the seed.
template <Field K>
SocleOracleResult<K> min_socle_degree_oracle(const PointSet<K>& ps, const GroebnerBasis<K>& gb,
                                             const HilbertTable& hf, std::uint64_t seed,
                                             int degree_cap = kDefaultDegreeCap) {
  SplitMix64 rng(seed);
  for (int attempt = 1; attempt <= kEllMaxAttempts; ++attempt) {
    std::vector<long long> ell;
    ell.reserve(static_cast<std::size_t>(ps.nvars()));
    for (int i = 0; i < ps.nvars(); ++i)
      ell.push_back(rng.uniform(-kEllCoefficientBound, kEllCoefficientBound));
    try {
      auto alg = artinian_reduce(ps, gb, ell, degree_cap);
      if (alg.total_dimension != ps.m())
        throw internal_error("Artinian reduction dimension " +
                             std::to_string(alg.total_dimension) + " != m");
      for (int d = 0; d <= alg.top_degree; ++d) {
        int expected = hf.value(d) - hf.value(d - 1);
        if (static_cast<int>(alg.graded_basis[static_cast<std::size_t>(d)].size()) != expected)
          throw internal_error("graded piece is not the Hilbert function difference");
      }
      SocleOracleResult<K> out;
      out.socle_multiset = socle_degrees(alg);
      if (out.socle_multiset.empty()) throw internal_error("Artinian algebra with empty socle");
      out.min_socle_degree = out.socle_multiset.front();
      out.attempts = attempt;
      out.ell = std::move(ell);
      return out;
    } catch (const nonzerodivisor_error&) {
      continue;
    }
  }
  throw cap_error("no valid linear form found in " + std::to_string(kEllMaxAttempts) +
                  " attempts");
}

template <Field K>
SocleOracleResult<K> min_socle_degree_oracle(const PointSet<K>& ps, std::uint64_t seed,
                                             int degree_cap = kDefaultDegreeCap) {
  auto pi = buchberger_moeller<K>(ps, degree_cap);
  return min_socle_degree_oracle(ps, pi.gb, pi.hf, seed, degree_cap);
}

}  // namespace socdist
