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

#include "msarr/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace msarr {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r.v_ = mpq_class(parse_integer(text));
    return r;
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("sign in denominator: '" + std::string(text) +
                                "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  r.v_ = mpq_class(num, den);
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

QSqrt5 QSqrt5::parse(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kTag = "*rt5";
  const auto tag = text.find(kTag);
  if (tag == std::string_view::npos) return QSqrt5(Rational::parse(text));
  if (tag + kTag.size() != text.size()) {
    throw std::invalid_argument("malformed Q(rt5) scalar: '" +
                                std::string(text) + "'");
  }
  std::string_view body = text.substr(0, tag);
  // Split "a+b" / "a-b" at the first sign that follows a digit.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') &&
        std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return QSqrt5(Rational(0), Rational::parse(body));
  }
  Rational a = Rational::parse(body.substr(0, split));
  std::string_view b_text = body.substr(split + 1);
  Rational b = Rational::parse(b_text);
  if (body[split] == '-') b = -b;
  return QSqrt5(std::move(a), std::move(b));
}

std::string QSqrt5::str() const { return a_.str() + "+" + b_.str() + "*rt5"; }

int QSqrt5::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  const int c = (a_ * a_ <=> Rational(5) * b_ * b_) < 0 ? -1 : 1;
  return c > 0 ? sa : sb;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

}  // namespace msarr
