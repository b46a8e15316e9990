// Copyright 2026 The Authors.
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

// Exact ordered fields: arbitrary-precision rationals and Q(sqrt 5).

#ifndef MSARR_SCALAR_HPP_
#define MSARR_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace msarr {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(runtime/explicit)
  Rational(long num, long den);
  explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }
  explicit Rational(const mpz_class& value) : v_(value) {}

  // Accepts "p" or "p/q" with optional leading sign; throws
  // std::invalid_argument on malformed text or zero denominator.
  static Rational parse(std::string_view text);
  std::string str() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  // Division by zero throws std::domain_error.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

// a + b*sqrt(5) with rational a, b. The pair (a, b) is the canonical form.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(long value) : a_(value) {}  // NOLINT(runtime/explicit)
  QSqrt5(Rational a) : a_(std::move(a)) {}  // NOLINT(runtime/explicit)
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  // (1 + sqrt 5) / 2.
  static QSqrt5 golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

  // Accepts "a+b*rt5", "a-b*rt5", "b*rt5" and plain rationals "a".
  static QSqrt5 parse(std::string_view text);
  // Always "a+b*rt5" (b may carry its own minus sign).
  std::string str() const;

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // The conjugate a - b*sqrt(5).
  QSqrt5 conjugate() const { return {a_, -b_}; }
  // a^2 - 5 b^2, nonzero for nonzero elements.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  QSqrt5 abs() const { return sign() < 0 ? -*this : *this; }

  QSqrt5& operator+=(const QSqrt5& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt5& operator-=(const QSqrt5& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  friend QSqrt5 operator-(const QSqrt5& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  Rational a_;
  Rational b_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}
inline std::ostream& operator<<(std::ostream& os, const QSqrt5& x) {
  return os << x.str();
}

// The operations the linear algebra and feasibility code relies on.
template <class F>
concept OrderedField = std::regular<F> && std::totally_ordered<F> &&
    std::constructible_from<F, long> && requires(F a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a += b } -> std::same_as<F&>;
  { a -= b } -> std::same_as<F&>;
  { a *= b } -> std::same_as<F&>;
  { b.sign() } -> std::convertible_to<int>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.str() } -> std::convertible_to<std::string>;
  { F::parse(std::string_view{}) } -> std::same_as<F>;
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr std::string_view name = "Q";
};

template <>
struct FieldTraits<QSqrt5> {
  static constexpr std::string_view name = "Q(rt5)";
};

}  // namespace msarr

#endif  // MSARR_SCALAR_HPP_
