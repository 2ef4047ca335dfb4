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

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "occfrac/rational.hpp"

namespace occfrac {

/// Dense univariate polynomial, coefficient i multiplies x^i.
///
/// Invariant: the leading stored coefficient is nonzero; the zero polynomial
/// has no coefficients.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(Coeff v) { return Polynomial({std::move(v)}); }
  static Polynomial one() { return constant(Coeff(1)); }
  /// x^k
  static Polynomial monomial(std::size_t k, Coeff v = Coeff(1)) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[k] = std::move(v);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  /// Coefficient of x^i, zero beyond the degree.
  Coeff operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : Coeff(0);
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at an exact rational point.
  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + Rational(*it);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, Polynomial p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
  }

  /// p^k by repeated squaring.
  Polynomial pow(unsigned k) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += Rational(c_[i]).str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;

/// Free-function spellings used throughout the library.
inline Rational poly_eval(const IntPolynomial& p, const Rational& x) { return p.eval(x); }
inline IntPolynomial poly_derivative(const IntPolynomial& p) { return p.derivative(); }
inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

}  // namespace occfrac
