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

#include <set>
#include <string>
#include <vector>

#include "socdist/geometry.hpp"
#include "socdist/prng.hpp"

namespace socdist {

/// Smallest s with alpha < C(s + n - 1, n - 1): the degree where the Hilbert
/// function of alpha generic points in P^{n-1} stops being maximal.
inline int compute_s(long long alpha, int n) {
  if (alpha < 1 || n < 2) throw input_error("compute_s needs alpha >= 1 and n >= 2");
  for (int s = 0;; ++s)
    if (static_cast<unsigned long long>(alpha) < binomial(s + n - 1, n - 1)) return s;
}

/// Predicted relation between d(Γ) and A_n for the hyperplane-plus-line
/// family, in terms of s and beta.
enum class Relation { D_GT_AN, AN_IN_BETA_OR_BETA_MINUS_1, D_EQ_AN, GRAY_ZONE };

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::D_GT_AN: return "D_GT_AN";
    case Relation::AN_IN_BETA_OR_BETA_MINUS_1: return "AN_IN_BETA_OR_BETA_MINUS_1";
    case Relation::D_EQ_AN: return "D_EQ_AN";
    case Relation::GRAY_ZONE: return "GRAY_ZONE";
  }
  return "?";
}

/// Parameters of the family: alpha generic points in the hyperplane x0 = 0
/// union beta collinear points off it.
struct MiglioreParams {
  int n = 2;            // ambient projective dimension, >= 2
  long long alpha = 0;  // points in the hyperplane, alpha >= beta + n - 2
  long long beta = 0;   // points on the line, beta >= 1 with distinct u_i
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 2) throw input_error("the family needs n >= 2");
    if (beta < 1) throw input_error("the family needs beta >= 1");
    if (alpha < beta + n - 2)
      throw input_error("the family needs alpha >= beta + n - 2 so that hyp = alpha");
  }

  int s() const { return compute_s(alpha, n); }
};

inline Relation classify(const MiglioreParams& p) {
  p.validate();
  int s = p.s();
  if (s <= p.beta - 2) return Relation::D_GT_AN;
  if (s >= p.beta + 2) return Relation::D_EQ_AN;
  if (s == p.beta - 1) return Relation::GRAY_ZONE;
  return Relation::AN_IN_BETA_OR_BETA_MINUS_1;  // s = beta or beta + 1
}

struct GenericityCertificate {
  std::vector<int> hilbert_values;   // computed HF of the sampled set
  std::vector<int> expected_values;  // min(C(i + dim, dim), count)
  int attempts = 0;
  bool valid = false;
};

inline constexpr int kGenericMaxAttempts = 100;

/// `count` points in P^dim with integer coordinates in [-bound, bound] whose
/// Hilbert function is maximal (the working definition of generic), resampled
/// until the certificate passes. Deterministic given the seed.
template <Field K>
std::pair<PointSet<K>, GenericityCertificate> generic_points(int dim, int count,
                                                             std::uint64_t seed,
                                                             long long bound = 9) {
  if (count < dim + 1) throw input_error("generic_points needs count >= dim + 1");
  SplitMix64 root(seed);
  GenericityCertificate cert;
  for (int attempt = 1; attempt <= kGenericMaxAttempts; ++attempt) {
    cert.attempts = attempt;
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(attempt));
    std::vector<std::vector<K>> raw;
    raw.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      std::vector<K> p;
      bool all_zero = true;
      for (int j = 0; j <= dim; ++j) {
        long long c = rng.uniform(-bound, bound);
        all_zero = all_zero && c == 0;
        p.push_back(K::from_int(c));
      }
      if (all_zero) p[0] = K::from_int(1);
      raw.push_back(std::move(p));
    }
    PointSet<K> ps;
    try {
      ps = normalize(raw, dim);
    } catch (const input_error&) {
      continue;  // coincident sample, try again
    }
    cert.hilbert_values.clear();
    cert.expected_values.clear();
    bool good = true;
    for (int d = 0;; ++d) {
      int expected = static_cast<int>(
          std::min<unsigned long long>(binomial(dim + d, d), static_cast<unsigned long long>(count)));
      int got = hilbert_function_eval(ps, d);
      cert.hilbert_values.push_back(got);
      cert.expected_values.push_back(expected);
      if (got != expected) {
        good = false;
        break;
      }
      if (expected == count) break;
    }
    if (good) {
      cert.valid = true;
      return {std::move(ps), cert};
    }
  }
  throw cap_error("no generic configuration found in " + std::to_string(kGenericMaxAttempts) +
                  " attempts (raise the coordinate bound)");
}

inline constexpr int kFamilyMaxAttempts = 100;

/// The union configuration: alpha generic points with x0 = 0, plus the beta
/// line points [1, u_i, 1, ..., 1] with distinct u_i in [1, 100]. The result
/// is post-checked to satisfy hyp(Γ) = alpha and resampled otherwise.
template <Field K>
PointSet<K> migliore_config(const MiglioreParams& p, Exec policy = Exec::parallel) {
  p.validate();
  SplitMix64 root(p.seed);
  for (int attempt = 1; attempt <= kFamilyMaxAttempts; ++attempt) {
    SplitMix64 rng = root.split(0xF00D + static_cast<std::uint64_t>(attempt));
    auto [hyper, cert] = generic_points<K>(p.n - 1, static_cast<int>(p.alpha),
                                           rng.next(), 9);
    std::vector<std::vector<K>> raw;
    raw.reserve(static_cast<std::size_t>(p.alpha + p.beta));
    for (const auto& q : hyper.points) {
      std::vector<K> v{K::from_int(0)};
      v.insert(v.end(), q.begin(), q.end());
      raw.push_back(std::move(v));
    }
    std::set<long long> used;
    while (static_cast<long long>(used.size()) < p.beta) used.insert(rng.uniform(1, 100));
    for (long long u : used) {
      std::vector<K> v(static_cast<std::size_t>(p.n + 1), K::from_int(1));
      v[1] = K::from_int(u);
      raw.push_back(std::move(v));
    }
    PointSet<K> ps = normalize(raw, p.n);
    if (hyp(ps, policy).count == p.alpha) return ps;
  }
  throw cap_error("family construction failed the hyp = alpha post-check repeatedly");
}

/// The fixed 6 + 3 configuration in P^3 used as a worked instance of the
/// family (also shipped as a data file).
template <Field K>
PointSet<K> fixture_p3_6plus3() {
  auto q = [](long long a, long long b, long long c, long long d) {
    return std::vector<K>{K::from_int(a), K::from_int(b), K::from_int(c), K::from_int(d)};
  };
  std::vector<std::vector<K>> pts{
      q(0, 0, 0, 1), q(0, 1, 0, 1),  q(0, 0, 1, 1),
      q(0, 1, 1, 1), q(0, 2, 1, 2),  q(0, -1, -2, 1),
      q(1, 7, 5, 0), q(1, 3, 4, 0),  q(2, 10, 9, 0),
  };
  return normalize(pts, 3);
}

}  // namespace socdist
