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

#include "socdist/artinian.hpp"
#include "socdist/constructions.hpp"
#include "socdist/geometry.hpp"
#include "socdist/resolution.hpp"

namespace socdist {

struct AnalyzeOptions {
  int max_a = 1;  // generalized distances d(Γ)_a computed for a = 1..max_a
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  Exec policy = Exec::parallel;
  bool run_dual_socle = true;  // second Artinian pass with a derived seed
};

/// Named verdicts joined from both pipelines. theorem_2_4 is the headline
/// bound d(Γ) >= A_n; the rest are the supporting facts it stands on.
struct AnalysisChecks {
  bool theorem_2_4 = false;
  bool lemma_2_1 = false;
  bool lemma_2_2 = false;
  bool lemma_2_3 = false;
  bool oracle_agreement = false;
  bool resolution_valid = false;

  bool all() const {
    return theorem_2_4 && lemma_2_1 && lemma_2_2 && lemma_2_3 && oracle_agreement &&
           resolution_valid;
  }
  std::vector<std::pair<std::string, bool>> named() const {
    return {{"theorem_2_4", theorem_2_4},       {"lemma_2_1", lemma_2_1},
            {"lemma_2_2", lemma_2_2},           {"lemma_2_3", lemma_2_3},
            {"oracle_agreement", oracle_agreement}, {"resolution_valid", resolution_valid}};
  }
};

template <Field K>
struct Analysis {
  int m = 0;
  int n = 0;
  HypResult<K> hyperplane;
  int d = 0;

  PointIdeal<K> ideal;       // Buchberger-Moeller route
  HilbertTable hf_eval;      // evaluation-rank route

  Resolution<K> resolution;  // minimal
  BettiTable betti;
  ResolutionChecks resolution_checks;

  SocleOracleResult<K> socle;
  std::vector<int> separator_per_point;
  int delta_gamma_value = 0;

  std::map<int, GeneralizedDistance> dgamma;

  AnalysisChecks checks;
  bool tight = false;  // d == A_n
};

template <Field K>
Analysis<K> analyze(const PointSet<K>& ps, const AnalyzeOptions& opt = {}) {
  if (ps.m() == 0) throw input_error("empty point set");
  if (!is_nondegenerate(ps))
    throw input_error("degenerate configuration: all points lie in a hyperplane, so the "
                      "analyzed invariants are not defined");

  Analysis<K> a;
  a.m = ps.m();
  a.n = ps.dim;

  a.hyperplane = hyp(ps, opt.policy);
  a.d = a.m - a.hyperplane.count;

  a.ideal = buchberger_moeller(ps, opt.degree_cap);
  a.hf_eval = hilbert_table_eval(ps, opt.degree_cap, opt.policy);

  a.resolution = minimalize(schreyer_resolution(a.ideal.gb, opt.policy));
  a.betti = betti_table(a.resolution, a.n);
  a.resolution_checks =
      verify_resolution(a.resolution, a.hf_eval, a.betti.regularity + 2, opt.policy);

  a.socle = min_socle_degree_oracle(ps, a.ideal.gb, a.ideal.hf, opt.seed, opt.degree_cap);

  a.separator_per_point = separator_degrees(ps, a.hf_eval, opt.policy);
  a.delta_gamma_value = a.separator_per_point.empty() ? 0 : a.separator_per_point[0];
  for (int dlt : a.separator_per_point) a.delta_gamma_value = std::min(a.delta_gamma_value, dlt);

  for (int deg = 1; deg <= opt.max_a; ++deg) a.dgamma[deg] = generalized_distance(ps, deg, opt.policy);

  const int an = a.betti.min_socle_degree;
  a.checks.theorem_2_4 = a.d >= an;
  a.tight = a.d == an;

  a.checks.lemma_2_3 = true;
  for (int dlt : a.separator_per_point) a.checks.lemma_2_3 = a.checks.lemma_2_3 && dlt >= an;

  // HF difference pattern for each removed point: 0 strictly below the
  // separator degree, exactly 1 at and above it
  a.checks.lemma_2_2 = true;
  for (int i = 0; i < a.m && a.checks.lemma_2_2; ++i) {
    std::vector<int> keep;
    for (int j = 0; j < a.m; ++j)
      if (j != i) keep.push_back(j);
    PointSet<K> sub = subset(ps, keep);
    int delta = a.separator_per_point[static_cast<std::size_t>(i)];
    for (int deg = 0; deg <= a.hf_eval.stabilized_at + 1; ++deg) {
      int diff = a.hf_eval.value(deg) - hilbert_function_eval(sub, deg, opt.policy);
      if (diff != (deg >= delta ? 1 : 0)) {
        a.checks.lemma_2_2 = false;
        break;
      }
    }
  }

  // chain bound d(Γ)_a >= b - a + 2 whenever d(Γ)_b >= 2, plus monotonicity
  a.checks.lemma_2_1 = true;
  for (const auto& [b, db] : a.dgamma) {
    if (db.value >= 2)
      for (const auto& [deg, da] : a.dgamma)
        if (deg <= b && da.value < b - deg + 2) a.checks.lemma_2_1 = false;
    for (const auto& [deg, da] : a.dgamma)
      if (deg <= b && da.value < db.value) a.checks.lemma_2_1 = false;
  }

  bool socle_match = a.socle.socle_multiset == a.betti.socle_degrees &&
                     a.socle.min_socle_degree == an;
  if (opt.run_dual_socle) {
    auto second = min_socle_degree_oracle(ps, a.ideal.gb, a.ideal.hf, opt.seed * 0x9E3779B9ULL + 1,
                                          opt.degree_cap);
    socle_match = socle_match && second.socle_multiset == a.socle.socle_multiset;
  }
  bool hf_match = true;
  for (int deg = 0; deg <= a.ideal.hf.stabilized_at + 2; ++deg)
    hf_match = hf_match && a.ideal.hf.value(deg) == a.hf_eval.value(deg) &&
               hilbert_function_gb(a.ideal.gb, deg) == a.hf_eval.value(deg);
  a.checks.oracle_agreement = socle_match && hf_match;

  a.checks.resolution_valid = a.resolution_checks.ok() && a.betti.projective_dimension == a.n &&
                              a.betti.a_min >= a.n + 1;

  return a;
}

}  // namespace socdist
