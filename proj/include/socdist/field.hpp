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

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace socdist {

/// Thrown on malformed input (files, coordinates, CLI parameters).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a configured resource cap (degree ceiling, resample budget) is hit.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision rational number in canonical form (gcd(num, den) = 1,
/// den > 0). Equality is structural. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_.canonicalize();
  }

  static Rational from_int(long long n) { return Rational(n); }

  /// Accepts decimal integers ("-12") and fractions ("3/4", "-3/4").
  static std::optional<Rational> parse(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(static_cast<mpq_class>(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw internal_error("rational division by zero");
    return Rational(static_cast<mpq_class>(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  Rational inv() const {
    if (is_zero()) throw internal_error("inverse of zero");
    return Rational(static_cast<mpq_class>(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  /// Total order on values (used only for deterministic tie-breaking and tests).
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const { return v_.get_str(); }

  static constexpr const char* field_name() { return "q"; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Prime-field residue with one process-wide modulus, configured once at
/// startup (default 2^31 - 1). Values live in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2147483647ULL;  // 2^31 - 1

  static void set_modulus(std::uint64_t p) {
    if (p < 3 || p >= (1ULL << 31)) throw input_error("prime-field modulus must be in [3, 2^31)");
    modulus_ = p;
  }
  static std::uint64_t modulus() { return modulus_; }

  PrimeField() : v_(0) {}
  explicit PrimeField(long long n) : v_(reduce(n)) {}

  static PrimeField from_int(long long n) { return PrimeField(n); }
  static std::optional<PrimeField> parse(std::string_view s);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return v_ == 0 ? 0 : 1; }

  PrimeField operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
  PrimeField operator+(PrimeField o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= modulus_) s -= modulus_;
    return raw(s);
  }
  PrimeField operator-(PrimeField o) const {
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_);
  }
  PrimeField operator*(PrimeField o) const { return raw((v_ * o.v_) % modulus_); }
  PrimeField operator/(PrimeField o) const { return *this * o.inv(); }
  PrimeField& operator+=(PrimeField o) { *this = *this + o; return *this; }
  PrimeField& operator-=(PrimeField o) { *this = *this - o; return *this; }
  PrimeField& operator*=(PrimeField o) { *this = *this * o; return *this; }
  PrimeField& operator/=(PrimeField o) { *this = *this / o; return *this; }

  PrimeField inv() const {
    if (v_ == 0) throw internal_error("inverse of zero");
    return raw(pow_mod(v_, modulus_ - 2));
  }

  bool operator==(PrimeField o) const { return v_ == o.v_; }
  bool operator!=(PrimeField o) const { return v_ != o.v_; }
  bool operator<(PrimeField o) const { return v_ < o.v_; }

  std::string str() const { return std::to_string(v_); }
  std::uint64_t residue() const { return v_; }

  static constexpr const char* field_name() { return "fp"; }

 private:
  static PrimeField raw(std::uint64_t v) {
    PrimeField x;
    x.v_ = v;
    return x;
  }
  static std::uint64_t reduce(long long n) {
    long long m = static_cast<long long>(modulus_);
    long long r = n % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }
  static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = (r * b) % modulus_;
      b = (b * b) % modulus_;
      e >>= 1;
    }
    return r;
  }

  static inline std::uint64_t modulus_ = kDefaultModulus;
  std::uint64_t v_;
};

template <typename K>
concept Field = requires(const K a, const K b) {
  { K() } -> std::same_as<K>;
  { K::from_int(1LL) } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a* b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Field<Rational>);
static_assert(Field<PrimeField>);

}  // namespace socdist
