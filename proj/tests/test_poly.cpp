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

#include "socdist/poly.hpp"
#include "socdist/prng.hpp"

using namespace socdist;

namespace {

using P = Poly<Rational>;

P rand_poly(SplitMix64& rng, int nvars, int maxdeg, int nterms) {
  std::vector<P::Term> ts;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = static_cast<int>(rng.uniform(0, maxdeg));
    ts.push_back({Monomial(std::move(e)), Rational(rng.uniform(-9, 9))});
  }
  return P::from_terms(nvars, std::move(ts));
}

std::vector<Rational> rand_point(SplitMix64& rng, int nvars) {
  std::vector<Rational> p;
  for (int i = 0; i < nvars; ++i) p.push_back(Rational(rng.uniform(-9, 9)));
  return p;
}

}  // namespace

TEST_CASE("multiplication by one is identity") {
  SplitMix64 rng(5);
  auto f = rand_poly(rng, 3, 3, 6);
  CHECK(f * P::constant(3, Rational(1)) == f);
}

TEST_CASE("difference of squares") {
  auto x0 = P::variable(2, 0);
  auto x1 = P::variable(2, 1);
  CHECK((x0 - x1) * (x0 + x1) == x0 * x0 - x1 * x1);
}

TEST_CASE("product of linear factors vanishes at its roots") {
  // (7*x0 - x1)(3*x0 - x1)(5*x0 - x1) evaluated at [1,7], [1,3], [1,5]
  auto x0 = P::variable(2, 0);
  auto x1 = P::variable(2, 1);
  std::vector<long long> u{7, 3, 5};
  P f = P::constant(2, Rational(1));
  for (long long ui : u) f = f * (x0.scaled(Rational(ui)) - x1);
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  for (long long ui : u) {
    std::vector<Rational> pt{Rational(1), Rational(ui)};
    CHECK(f.evaluate(pt).is_zero());
  }
  std::vector<Rational> off{Rational(1), Rational(2)};
  CHECK(!f.evaluate(off).is_zero());
}

TEST_CASE("basic evaluation") {
  auto f = P::variable(3, 0);
  std::vector<Rational> p{Rational(0), Rational(0), Rational(1)};
  CHECK(f.evaluate(p).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rand_poly(rng, 3, 2, 5);
    auto g = rand_poly(rng, 3, 2, 5);
    auto p = rand_point(rng, 3);
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
  }
}

TEST_CASE("multiplication is commutative and associative; degrees add") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = rand_poly(rng, 3, 2, 4);
    auto g = rand_poly(rng, 3, 2, 4);
    auto h = rand_poly(rng, 3, 2, 4);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
  auto f = P::variable(2, 0) + P::variable(2, 1);
  auto g = P::variable(2, 0) * P::variable(2, 0) - P::variable(2, 1) * P::variable(2, 1);
  CHECK(f.is_homogeneous());
  CHECK((f * g).degree() == f.degree() + g.degree());
}

TEST_CASE("terms are stored in descending grevlex order without zeros") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = rand_poly(rng, 3, 3, 8);
    for (std::size_t i = 0; i + 1 < f.terms().size(); ++i)
      CHECK(grevlex_greater(f.terms()[i].first, f.terms()[i + 1].first));
    for (const auto& [m, c] : f.terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("text rendering") {
  // x0^2*x1 - 3/2*x2^3
  auto f = P::term(Monomial({2, 1, 0}), Rational(1)) + P::term(Monomial({0, 0, 3}), Rational(-3, 2));
  CHECK(f.str() == "x0^2*x1 - 3/2*x2^3");
  CHECK(P::zero(3).str() == "0");
  CHECK(P::constant(3, Rational(-5)).str() == "-5");
  auto g = P::term(Monomial({0, 1, 0}), Rational(-1)) + P::term(Monomial({0, 0, 1}), Rational(2));
  CHECK(g.str() == "-x1 + 2*x2");
}

TEST_CASE("substitute and drop_variable") {
  // f = x0^2 + x1; substitute x0 := x1 + x2 gives (x1+x2)^2 + x1
  auto f = P::term(Monomial({2, 0, 0}), Rational(1)) + P::variable(3, 1);
  auto sub = substitute(f, 0, P::variable(3, 1) + P::variable(3, 2));
  auto expect = (P::variable(3, 1) + P::variable(3, 2)) * (P::variable(3, 1) + P::variable(3, 2)) +
                P::variable(3, 1);
  CHECK(sub == expect);
  auto dropped = drop_variable(sub, 0);
  CHECK(dropped.nvars() == 2);
  std::vector<Rational> p{Rational(2), Rational(3)};
  std::vector<Rational> q{Rational(0), Rational(2), Rational(3)};
  CHECK(dropped.evaluate(p) == sub.evaluate(q));
}
