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

#include "socdist/groebner.hpp"
#include "socdist/prng.hpp"
#include "test_util.hpp"

using namespace socdist;

namespace {

using P = Poly<Rational>;

P rand_poly(SplitMix64& rng, int nvars, int maxdeg, int nterms) {
  std::vector<P::Term> ts;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = static_cast<int>(rng.uniform(0, maxdeg));
    ts.push_back({Monomial(std::move(e)), Rational(rng.uniform(-5, 5))});
  }
  return P::from_terms(nvars, std::move(ts));
}

bool is_reduced(const GroebnerBasis<Rational>& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    if (!gb.gens[i].lead_coeff().is_one()) return false;
    for (const auto& [m, c] : gb.gens[i].terms())
      for (std::size_t j = 0; j < gb.gens.size(); ++j) {
        if (j == i) continue;
        if (gb.gens[j].lead_monomial().divides(m)) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("normal form: members of the ideal reduce to zero") {
  SplitMix64 rng(31);
  std::vector<P> gens{
      P::term(Monomial({2, 0, 0}), Rational(1)) - P::term(Monomial({0, 1, 1}), Rational(1)),
      P::term(Monomial({0, 2, 0}), Rational(1)) + P::variable(3, 2) * P::variable(3, 0),
  };
  auto gb = buchberger(gens);
  for (int trial = 0; trial < 10; ++trial) {
    P f(3);
    for (const auto& g : gens) f += g * rand_poly(rng, 3, 2, 3);
    CHECK(normal_form(f, gb).is_zero());
  }
}

TEST_CASE("normal form: 1 is irreducible modulo positive-degree generators") {
  std::vector<P> gens{P::variable(3, 0), P::variable(3, 1) * P::variable(3, 1)};
  auto gb = buchberger(gens);
  auto one = P::constant(3, Rational(1));
  CHECK(normal_form(one, gb) == one);
}

TEST_CASE("normal form: confluence spot check") {
  SplitMix64 rng(32);
  std::vector<P> gens{
      P::term(Monomial({1, 1, 0}), Rational(1)) - P::term(Monomial({0, 0, 2}), Rational(1)),
      P::term(Monomial({0, 2, 0}), Rational(1)) - P::term(Monomial({1, 0, 1}), Rational(1)),
  };
  auto gb = buchberger(gens);
  for (int trial = 0; trial < 10; ++trial) {
    P f = rand_poly(rng, 3, 3, 5);
    P x = P::variable(3, 0);
    // normal_form(x*f) equals normal_form(x*normal_form(f))
    CHECK(normal_form(x * f, gb) == normal_form(x * normal_form(f, gb), gb));
  }
}

TEST_CASE("division identity f = sum q_i g_i + r") {
  SplitMix64 rng(33);
  std::vector<P> divisors{
      P::term(Monomial({1, 1, 0}), Rational(1)) - P::term(Monomial({0, 0, 2}), Rational(1)),
      P::term(Monomial({0, 2, 0}), Rational(1)) - P::term(Monomial({1, 0, 1}), Rational(1)),
  };
  for (int trial = 0; trial < 10; ++trial) {
    P f = rand_poly(rng, 3, 3, 6);
    auto dv = division(f, divisors);
    P recon = dv.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) recon += dv.quotients[i] * divisors[i];
    CHECK(recon == f);
  }
}

TEST_CASE("a reduced basis is returned unchanged") {
  std::vector<P> gens{P::variable(2, 0), P::variable(2, 1)};
  auto gb = buchberger(gens);
  REQUIRE(gb.gens.size() == 2);
  CHECK(gb.gens[0] == P::variable(2, 1));  // ascending lead order: x1 < x0
  CHECK(gb.gens[1] == P::variable(2, 0));
}

TEST_CASE("complete intersection x0, x1^t, x2..xn is its own basis") {
  const int n = 3, t = 3;
  std::vector<P> gens;
  gens.push_back(P::variable(n + 1, 0));
  gens.push_back(P::term(Monomial({0, t, 0, 0}), Rational(1)));
  gens.push_back(P::variable(n + 1, 2));
  gens.push_back(P::variable(n + 1, 3));
  auto gb = buchberger(gens);
  REQUIRE(gb.gens.size() == 4);
  CHECK(is_reduced(gb));
  for (const auto& g : gens)
    CHECK(std::find(gb.gens.begin(), gb.gens.end(), g) != gb.gens.end());
}

TEST_CASE("reduced basis is canonical across generator presentations") {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<P> gens;
    for (int i = 0; i < 3; ++i) {
      P g = rand_poly(rng, 3, 2, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto gb1 = buchberger(gens);
    std::reverse(gens.begin(), gens.end());
    gens[0] = gens[0].scaled(Rational(3));  // rescaling must not matter either
    auto gb2 = buchberger(gens);
    CHECK(gb1.gens == gb2.gens);
    CHECK(is_reduced(gb1));
  }
}

TEST_CASE("buchberger result satisfies the S-pair criterion") {
  SplitMix64 rng(35);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<P> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rand_poly(rng, 3, 2, 3));
    std::erase_if(gens, [](const P& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    auto gb = buchberger(gens);
    if (gb.gens.size() == 1 && gb.gens[0].is_unit_constant()) continue;
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
      for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
        CHECK(normal_form(spoly(gb.gens[i], gb.gens[j]), gb).is_zero());
  }
}
