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

#include <string>

#include "json.hpp"
#include "socdist/analyze.hpp"
#include "socdist/io.hpp"

namespace socdist {

inline constexpr int kReportVersion = 1;

struct ReportMeta {
  std::string command;
  std::string input_path;   // empty when the input was not a file
  std::string input_digest; // empty when unknown
  std::uint64_t seed = 0;
};

/// Exit-code contract: 0 all checks pass, 2 a property check failed,
/// 3 input error, 4 resource cap exceeded.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 2,
  kExitInputError = 3,
  kExitCapExceeded = 4,
};

template <Field K>
nlohmann::ordered_json build_report(const Analysis<K>& a, const ReportMeta& meta) {
  // never serialize silently inconsistent data: the headline check must match
  // the numbers it is about, and agreement claims must match the multisets
  if (a.checks.theorem_2_4 != (a.d >= a.betti.min_socle_degree))
    throw internal_error("refusing to serialize: stored theorem_2_4 verdict contradicts d and A_n");
  if (a.checks.oracle_agreement && a.socle.socle_multiset != a.betti.socle_degrees)
    throw internal_error("refusing to serialize: oracle_agreement claimed but socle multisets differ");

  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["tool"] = "socdist";
  j["command"] = meta.command;
  j["field"] = K::field_name();
  j["seed"] = std::to_string(meta.seed);
  j["input"] = {{"path", meta.input_path}, {"digest", meta.input_digest}, {"m", a.m}, {"n", a.n}};

  nlohmann::ordered_json witness = nlohmann::json::array();
  for (const auto& c : a.hyperplane.witness_normal) witness.push_back(c.str());
  j["combinatorial"] = {{"hyp", a.hyperplane.count}, {"d", a.d}, {"witness_normal", witness}};

  nlohmann::ordered_json gens = nlohmann::json::array();
  for (const auto& g : a.ideal.gb.gens) gens.push_back(g.str());
  j["ideal"] = {{"generators", gens},
                {"hilbert_function", a.ideal.hf.values},
                {"stabilized_at", a.ideal.hf.stabilized_at},
                {"hilbert_function_eval", a.hf_eval.values}};

  nlohmann::ordered_json modules = nlohmann::json::array();
  for (const auto& mod : a.resolution.modules) {
    auto s = mod.shifts;
    std::sort(s.begin(), s.end());
    modules.push_back(s);
  }
  nlohmann::ordered_json betti = nlohmann::json::array();
  for (const auto& [ij, count] : a.betti.beta)
    betti.push_back({{"i", ij.first}, {"j", ij.second}, {"count", count}});
  j["resolution"] = {{"modules", modules},
                     {"projective_dimension", a.betti.projective_dimension},
                     {"regularity", a.betti.regularity},
                     {"betti", betti},
                     {"last_shifts", a.betti.last_shifts},
                     {"a_min", a.betti.a_min},
                     {"socle_degrees", a.betti.socle_degrees},
                     {"A_n", a.betti.min_socle_degree}};

  j["socle_oracle"] = {{"socle_degrees", a.socle.socle_multiset},
                       {"A_n", a.socle.min_socle_degree},
                       {"attempts", a.socle.attempts},
                       {"ell", a.socle.ell}};

  j["separators"] = {{"per_point", a.separator_per_point}, {"delta_gamma", a.delta_gamma_value}};

  nlohmann::ordered_json dg = nlohmann::json::object();
  for (const auto& [deg, res] : a.dgamma)
    dg[std::to_string(deg)] = {{"value", res.value}, {"removed_witness", res.removed_witness}};
  j["generalized_distance"] = dg;

  nlohmann::ordered_json checks = nlohmann::json::object();
  for (const auto& [name, pass] : a.checks.named()) checks[name] = pass;
  j["checks"] = checks;
  j["tight"] = a.tight;
  j["all_checks_pass"] = a.checks.all();
  return j;
}

template <Field K>
std::string human_summary(const Analysis<K>& a) {
  std::string s;
  s += "m = " + std::to_string(a.m) + " points in projective " + std::to_string(a.n) + "-space\n";
  s += "hyp = " + std::to_string(a.hyperplane.count) + ", d = " + std::to_string(a.d) + "\n";
  s += "regularity = " + std::to_string(a.betti.regularity) +
       ", a_min = " + std::to_string(a.betti.a_min) +
       ", A_n = " + std::to_string(a.betti.min_socle_degree) + "\n";
  s += "socle degrees (resolution): ";
  for (int b : a.betti.socle_degrees) s += std::to_string(b) + " ";
  s += "\nsocle degrees (artinian):   ";
  for (int b : a.socle.socle_multiset) s += std::to_string(b) + " ";
  s += "\ndelta(Gamma) = " + std::to_string(a.delta_gamma_value) + "\n";
  for (const auto& [deg, res] : a.dgamma)
    s += "d_" + std::to_string(deg) + " = " + std::to_string(res.value) + "\n";
  s += std::string("d >= A_n: ") + (a.checks.theorem_2_4 ? "yes" : "VIOLATED") +
       (a.tight ? " (tight: d = A_n)\n" : "\n");
  s += "checks:";
  for (const auto& [name, pass] : a.checks.named()) s += std::string(" ") + name + (pass ? "=pass" : "=FAIL");
  s += "\n";
  return s;
}

}  // namespace socdist
