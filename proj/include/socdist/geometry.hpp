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

#include <vector>

#include "socdist/parallel.hpp"
#include "socdist/point_ideal.hpp"
#include "socdist/points.hpp"

namespace socdist {

/// All k-subsets of {0..m-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

template <Field K>
struct HypResult {
  int count = 0;
  std::vector<K> witness_normal;  // canonically scaled hyperplane normal
};

namespace detail {

template <Field K>
std::vector<K> hyperplane_normal(const PointSet<K>& ps, const std::vector<int>& idx) {
  Matrix<K> m(idx.size(), static_cast<std::size_t>(ps.nvars()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < ps.nvars(); ++j)
      m.at(i, static_cast<std::size_t>(j)) =
          ps.points[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(j)];
  auto kern = kernel_basis(m);
  if (kern.size() != 1) return {};  // subset does not span a unique hyperplane
  return canonical_scale(std::move(kern[0]));
}

template <Field K>
int incidence_count(const PointSet<K>& ps, const std::vector<K>& normal) {
  int count = 0;
  for (const auto& p : ps.points) {
    K dot;
    for (int j = 0; j < ps.nvars(); ++j)
      dot += normal[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
    if (dot.is_zero()) ++count;
  }
  return count;
}

}  // namespace detail

/// hyp(Γ): exact maximum number of points on one hyperplane, with a witness
/// normal. Enumerates the C(m, n) size-n subsets of points; a maximal
/// incidence set spans its hyperplane when Γ is non-degenerate, so only
/// rank-n subsets matter (see the README note). Ties resolve to the first
/// subset in lexicographic order, so the witness is deterministic.
template <Field K>
HypResult<K> hyp(const PointSet<K>& ps, Exec policy = Exec::parallel) {
  if (!is_nondegenerate(ps))
    throw input_error("hyp requires a non-degenerate point set (not all in a hyperplane)");
  auto subsets = combinations(ps.m(), ps.dim);
  std::vector<int> counts(subsets.size(), -1);
  parallel_for(subsets.size(), policy, [&](std::size_t s) {
    auto normal = detail::hyperplane_normal(ps, subsets[s]);
    if (!normal.empty()) counts[s] = detail::incidence_count(ps, normal);
  });
  std::size_t best = subsets.size();
  for (std::size_t s = 0; s < subsets.size(); ++s)
    if (counts[s] >= 0 && (best == subsets.size() || counts[s] > counts[best])) best = s;
  if (best == subsets.size()) throw internal_error("no spanning subset found for hyp");
  HypResult<K> out;
  out.witness_normal = detail::hyperplane_normal(ps, subsets[best]);
  out.count = counts[best];
  // recount independently of the subset scan
  if (detail::incidence_count(ps, out.witness_normal) != out.count)
    throw internal_error("witness recount mismatch");
  return out;
}

template <Field K>
int min_distance(const PointSet<K>& ps, Exec policy = Exec::parallel) {
  return ps.m() - hyp(ps, policy).count;
}

/// Degree-a Veronese embedding: each point maps to its vector of degree-a
/// monomial values (descending grevlex coordinates) in P^{N_a}.
template <Field K>
PointSet<K> veronese(const PointSet<K>& ps, int a, Exec policy = Exec::parallel) {
  if (a < 1) throw input_error("veronese degree must be >= 1");
  auto mons = monomials_of_degree(ps.dim, a);
  std::vector<std::vector<K>> image(static_cast<std::size_t>(ps.m()));
  parallel_for(static_cast<std::size_t>(ps.m()), policy, [&](std::size_t i) {
    std::vector<K> v;
    v.reserve(mons.size());
    for (const auto& mono : mons) {
      K x = K::from_int(1);
      for (int var = 0; var < ps.nvars(); ++var)
        for (int rep = 0; rep < mono.exp(var); ++rep)
          x *= ps.points[i][static_cast<std::size_t>(var)];
      v.push_back(x);
    }
    image[i] = std::move(v);
  });
  return normalize(image, static_cast<int>(mons.size()) - 1);
}

struct GeneralizedDistance {
  int value = 0;
  std::vector<int> removed_witness;  // point labels whose removal grows the degree-a ideal
};

/// d(Γ)_a by the defining subset search: the smallest t such that removing
/// some t points strictly increases dim I(Γ)_a, found by evaluation-matrix
/// ranks over all removal subsets in lexicographic order.
template <Field K>
GeneralizedDistance generalized_distance(const PointSet<K>& ps, int a, Exec policy = Exec::parallel) {
  if (a < 1) throw input_error("generalized distance needs a >= 1");
  Matrix<K> full = evaluation_matrix(ps, a, policy);
  std::size_t full_rank = rank(full);
  for (int t = 1; t <= ps.m(); ++t) {
    auto removals = combinations(ps.m(), t);
    std::vector<char> witness(removals.size(), 0);
    parallel_for(removals.size(), policy, [&](std::size_t s) {
      std::vector<char> removed(static_cast<std::size_t>(ps.m()), 0);
      for (int i : removals[s]) removed[static_cast<std::size_t>(i)] = 1;
      Matrix<K> sub(static_cast<std::size_t>(ps.m() - t), full.cols());
      std::size_t r = 0;
      for (int i = 0; i < ps.m(); ++i) {
        if (removed[static_cast<std::size_t>(i)]) continue;
        for (std::size_t j = 0; j < full.cols(); ++j)
          sub.at(r, j) = full.at(static_cast<std::size_t>(i), j);
        ++r;
      }
      witness[s] = rank(sub) < full_rank ? 1 : 0;
    });
    for (std::size_t s = 0; s < removals.size(); ++s)
      if (witness[s]) return {t, removals[s]};
  }
  throw internal_error("generalized distance search did not terminate");
}

/// Hilbert table computed purely from evaluation ranks (no Groebner data).
template <Field K>
HilbertTable hilbert_table_eval(const PointSet<K>& ps, int degree_cap = kDefaultDegreeCap,
                                Exec policy = Exec::parallel) {
  HilbertTable t;
  t.m = ps.m();
  int sigma = -1;
  for (int d = 0;; ++d) {
    int v = hilbert_function_eval(ps, d, policy);
    t.values.push_back(v);
    if (sigma < 0 && v == ps.m()) sigma = d;
    if (sigma >= 0 && d >= sigma + 2) break;
    if (d > degree_cap) throw cap_error("degree cap exceeded while tabulating the Hilbert function");
  }
  t.stabilized_at = sigma;
  return t;
}

/// δ(P_i): least degree where the Hilbert function of Γ exceeds the one of
/// Γ minus the point, by evaluation ranks. Bounded by the stabilization
/// degree (δ is a socle degree).
template <Field K>
int separator_degree(const PointSet<K>& ps, int i, const HilbertTable& hf,
                     Exec policy = Exec::serial) {
  if (ps.m() < 2) throw input_error("separator degree needs at least two points");
  std::vector<int> keep;
  for (int j = 0; j < ps.m(); ++j)
    if (j != i) keep.push_back(j);
  PointSet<K> sub = subset(ps, keep);
  for (int d = 1; d <= hf.stabilized_at; ++d)
    if (hf.value(d) > hilbert_function_eval(sub, d, policy)) return d;
  throw internal_error("no separator found up to the regularity bound");
}

template <Field K>
std::vector<int> separator_degrees(const PointSet<K>& ps, const HilbertTable& hf,
                                   Exec policy = Exec::parallel) {
  std::vector<int> out(static_cast<std::size_t>(ps.m()), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(ps.m()));
  parallel_for(static_cast<std::size_t>(ps.m()), policy, [&](std::size_t i) {
    try {
      out[i] = separator_degree(ps, static_cast<int>(i), hf, Exec::serial);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <Field K>
int delta_gamma(const PointSet<K>& ps, const HilbertTable& hf, Exec policy = Exec::parallel) {
  auto per_point = separator_degrees(ps, hf, policy);
  int best = per_point[0];
  for (int d : per_point) best = std::min(best, d);
  return best;
}

}  // namespace socdist
