#pragma once

// Exact rationals over GMP. Always canonical: lowest terms, positive
// denominator, zero is 0/1.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace simvol::exact {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed
  // input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  // 2^exponent for any (possibly negative) exponent.
  static Rational pow2(long exponent);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;
  Rational pow(long exponent) const;  // negative exponent requires nonzero

  // "p" when the value is an integer, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class value_{0};
};

enum class ArithOp { Add, Sub, Mul, Div };

// Division by zero is reported as std::nullopt rather than thrown.
std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace simvol::exact
