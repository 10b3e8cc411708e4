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

#include "socdist/field.hpp"

namespace socdist {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  mpq_class v;
  if (v.set_str(std::string(num) + "/" + std::string(den), 10) != 0) return std::nullopt;
  if (sgn(v.get_den()) == 0) return std::nullopt;
  v.canonicalize();
  return Rational(std::move(v));
}

std::optional<PrimeField> PrimeField::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  auto to_residue = [](std::string_view t) -> long long {
    long long m = static_cast<long long>(PrimeField::modulus());
    long long acc = 0;
    bool neg = false;
    std::size_t i = 0;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    for (; i < t.size(); ++i) acc = (acc * 10 + (t[i] - '0')) % m;
    return neg ? -acc : acc;
  };
  PrimeField numv = PrimeField::from_int(to_residue(num));
  PrimeField denv = PrimeField::from_int(to_residue(den));
  if (denv.is_zero()) return std::nullopt;
  return numv / denv;
}

}  // namespace socdist
