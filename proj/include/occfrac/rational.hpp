// Copyright 2026 The occfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "occfrac/errors.hpp"

namespace occfrac {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// A thin value wrapper over GMP's mpq_class. Every operation returns a
/// canonical value, so `==` is structural equality. Wrapping (rather than
/// aliasing) mpq_class keeps gmpxx expression templates out of `auto`
/// deductions in client code.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      v_ = static_cast<long>(v);
    } else {
      v_ = static_cast<unsigned long>(v);
    }
  }
  Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& mpq() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return from_raw(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den", or "num" when the denominator is 1.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational from_raw(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

/// Integer power; negative exponents invert. 0^0 = 1.
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Parses "P/Q", "P" or "-P/Q". Decimal notation is rejected.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) {
    throw ParameterError("not a rational of the form P/Q: '" +
                         std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  BigInt bn(n, 10);
  BigInt bd(std::string(den), 10);
  if (bd == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  return Rational(bn, bd);
}

/// Natural logarithm of a positive big integer, accurate to long double.
inline long double log_bigint(const BigInt& v) {
  if (v <= 0) throw DomainError("log of a nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp) * std::log(2.0L);
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace occfrac

template <>
struct std::hash<occfrac::Rational> {
  std::size_t operator()(const occfrac::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
