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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "socdist/point_ideal.hpp"
#include "socdist/resolution.hpp"
#include "test_util.hpp"

using namespace socdist;
using socdist::testutil::five_point_fixture;
using socdist::testutil::nine_point_fixture;
using socdist::testutil::random_config;

namespace {

using P = Poly<Rational>;

std::vector<int> sorted_shifts(const Resolution<Rational>& res, int k) {
  auto s = res.modules[static_cast<std::size_t>(k)].shifts;
  std::sort(s.begin(), s.end());
  return s;
}

bool d_squared_zero(const Resolution<Rational>& res) {
  for (int k = 2; k <= res.length(); ++k) {
    const auto& a = res.diff[static_cast<std::size_t>(k - 1)];
    const auto& b = res.diff[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        Poly<Rational> acc(res.nvars);
        for (std::size_t t = 0; t < b.size(); ++t) acc += a[i][t] * b[t][j];
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("principal ideal resolves in one step") {
  std::vector<P> gens{P::variable(3, 0)};
  auto gb = buchberger(gens);
  auto res = schreyer_resolution(gb);
  CHECK(res.length() == 1);
  CHECK(res.modules[1].shifts == std::vector<int>{1});
  auto mres = minimalize(res);
  CHECK(mres.length() == 1);
  CHECK(mres.modules[1].shifts == std::vector<int>{1});
}

TEST_CASE("complete intersection x0, x1^3, x2, x3 has the Koszul shape") {
  const int nvars = 4, t = 3;
  std::vector<P> gens{P::variable(nvars, 0), P::term(Monomial({0, t, 0, 0}), Rational(1)),
                      P::variable(nvars, 2), P::variable(nvars, 3)};
  auto gb = buchberger(gens);
  auto mres = minimalize(schreyer_resolution(gb));
  REQUIRE(mres.length() == 4);
  CHECK(sorted_shifts(mres, 1) == std::vector<int>{1, 1, 1, 3});
  CHECK(sorted_shifts(mres, 4) == std::vector<int>{t + 3});  // single top shift t + n
  long total = 0;
  for (int k = 0; k <= 4; ++k) total += mres.modules[static_cast<std::size_t>(k)].rank();
  CHECK(total == 16);  // 2^4, the Koszul complex on four generators
}

TEST_CASE("five-point fixture: exact minimal shifts and invariants") {
  auto ps = five_point_fixture();
  auto pi = buchberger_moeller(ps);
  auto res = schreyer_resolution(pi.gb);
  CHECK(d_squared_zero(res));
  auto mres = minimalize(res);
  REQUIRE(mres.length() == 2);
  CHECK(sorted_shifts(mres, 1) == std::vector<int>{2, 2, 4});
  CHECK(sorted_shifts(mres, 2) == std::vector<int>{3, 5});
  auto bt = betti_table(mres, 2);
  CHECK(bt.last_shifts == std::vector<int>{3, 5});
  CHECK(bt.a_min == 3);
  CHECK(bt.min_socle_degree == 1);
  CHECK(bt.regularity == 3);
  CHECK(bt.projective_dimension == 2);
  CHECK(bt.socle_degrees == std::vector<int>{1, 3});
}

TEST_CASE("nine-point fixture: exact minimal resolution") {
  auto ps = nine_point_fixture();
  auto pi = buchberger_moeller(ps);
  auto mres = minimalize(schreyer_resolution(pi.gb));
  REQUIRE(mres.length() == 3);
  CHECK(sorted_shifts(mres, 1) == std::vector<int>{2, 2, 3, 3, 3, 3});
  CHECK(sorted_shifts(mres, 2) == std::vector<int>{3, 4, 4, 4, 4, 4, 4});
  CHECK(sorted_shifts(mres, 3) == std::vector<int>{5, 6});
  auto bt = betti_table(mres, 3);
  CHECK(bt.min_socle_degree == 2);  // A_3 = 5 - 3
  CHECK(bt.regularity == 3);
}

TEST_CASE("minimalize leaves an already-minimal resolution unchanged") {
  auto ps = five_point_fixture();
  auto pi = buchberger_moeller(ps);
  auto mres = minimalize(schreyer_resolution(pi.gb));
  auto again = minimalize(mres);
  REQUIRE(again.length() == mres.length());
  for (int k = 0; k <= mres.length(); ++k)
    CHECK(again.modules[static_cast<std::size_t>(k)].shifts ==
          mres.modules[static_cast<std::size_t>(k)].shifts);
  for (int k = 1; k <= mres.length(); ++k)
    CHECK(again.diff[static_cast<std::size_t>(k)] == mres.diff[static_cast<std::size_t>(k)]);
}

TEST_CASE("random point ideals: d∘d = 0 and the verification suite passes") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 8; ++trial) {
    auto child = rng.split(static_cast<std::uint64_t>(trial));
    int dim = trial % 2 == 0 ? 2 : 3;
    auto ps = random_config(child, dim, 5 + trial % 3);
    auto pi = buchberger_moeller(ps);
    auto res = schreyer_resolution(pi.gb);
    CHECK(d_squared_zero(res));
    auto mres = minimalize(res);
    auto bt = betti_table(mres, dim);
    CHECK(bt.projective_dimension == dim);
    CHECK(bt.a_min >= dim + 1);
    auto checks = verify_resolution(mres, pi.hf, bt.regularity + 2);
    CHECK(checks.d_squared_zero);
    CHECK(checks.exactness);
    CHECK(checks.euler);
  }
}

TEST_CASE("Betti table is canonical across generator presentations") {
  auto ps = five_point_fixture();
  auto pi = buchberger_moeller(ps);
  auto bt1 = betti_table(minimalize(schreyer_resolution(pi.gb)), 2);

  // resolve from a scrambled, redundant generating set of the same ideal
  std::vector<P> gens = pi.gb.gens;
  std::reverse(gens.begin(), gens.end());
  gens.push_back(gens[0] * P::variable(3, 1));  // redundant element
  auto gb2 = buchberger(gens);
  CHECK(gb2.gens == pi.gb.gens);  // reduced basis is unique
  auto bt2 = betti_table(minimalize(schreyer_resolution(gb2)), 2);
  CHECK(bt1.beta == bt2.beta);
  CHECK(bt1.last_shifts == bt2.last_shifts);
}

TEST_CASE("verify_resolution flags a corrupted differential") {
  auto ps = five_point_fixture();
  auto pi = buchberger_moeller(ps);
  auto mres = minimalize(schreyer_resolution(pi.gb));
  auto bt = betti_table(mres, 2);
  auto good = verify_resolution(mres, pi.hf, bt.regularity + 2);
  REQUIRE(good.ok());

  auto corrupted = mres;
  corrupted.diff[2][0][0] += Poly<Rational>::term(
      Monomial({corrupted.modules[2].shifts[0] - corrupted.modules[1].shifts[0], 0, 0}),
      Rational(1));
  auto bad = verify_resolution(corrupted, pi.hf, bt.regularity + 2);
  CHECK(!bad.d_squared_zero);
}

TEST_CASE("Euler characteristic identity against the evaluation oracle") {
  SplitMix64 rng(515);
  for (int trial = 0; trial < 12; ++trial) {
    auto child = rng.split(static_cast<std::uint64_t>(trial));
    auto ps = random_config(child, 2, 4 + trial % 5);
    auto pi = buchberger_moeller(ps);
    auto mres = minimalize(schreyer_resolution(pi.gb));
    auto bt = betti_table(mres, 2);
    // oracle HF values from evaluation ranks only
    HilbertTable oracle;
    oracle.m = ps.m();
    oracle.stabilized_at = pi.hf.stabilized_at;
    for (int d = 0; d <= bt.regularity + 2; ++d)
      oracle.values.push_back(hilbert_function_eval(ps, d));
    auto checks = verify_resolution(mres, oracle, bt.regularity + 2);
    CHECK(checks.euler);
    CHECK(checks.exactness);
  }
}
