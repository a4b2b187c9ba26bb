#pragma once

#include <compare>
#include <string>

#include "simvol/exact/rational.hpp"

namespace simvol::exact {

// mantissa * 2^exponent, normalized so the mantissa is odd (or the value is 0
// with exponent 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : Dyadic(Integer(value), 0) {}  // NOLINT(google-explicit-constructor)
  Dyadic(Integer mantissa, long exponent);

  // Largest / smallest multiple of 2^-precision below / above q.
  static Dyadic floor(const Rational& q, long precision);
  static Dyadic ceil(const Rational& q, long precision);

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }

  Rational to_rational() const;
  double to_double() const;
  std::string str() const { return to_rational().str(); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  Dyadic shifted(long bits) const { return Dyadic(mantissa_, exponent_ + bits); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  Integer mantissa_{0};
  long exponent_ = 0;
};

// Closed interval [lo, hi] with dyadic endpoints. Every operation returns an
// interval that contains the exact image of its inputs.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  explicit DyadicInterval(const Dyadic& point) : lo_(point), hi_(point) {}
  DyadicInterval(Dyadic lo, Dyadic hi);  // throws std::invalid_argument if lo > hi

  // Tightest enclosure of q on the 2^-precision grid.
  static DyadicInterval around(const Rational& q, long precision);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  // True iff width <= 2^-bits.
  bool width_at_most(long bits) const;

  bool contains(const Rational& q) const;
  bool contains(const DyadicInterval& other) const;
  bool intersects(const DyadicInterval& other) const;
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }

  // Non-certified convenience value.
  double midpoint_double() const;

  DyadicInterval round_outward(long precision) const;

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  DyadicInterval operator-() const { return DyadicInterval(-hi_, -lo_); }
  DyadicInterval scaled(const Integer& factor) const;
  DyadicInterval shifted(long bits) const { return {lo_.shifted(bits), hi_.shifted(bits)}; }
  DyadicInterval abs() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

// Outward-rounded quotient on the 2^-precision grid; the divisor must not
// contain zero (std::domain_error otherwise).
DyadicInterval divide(const DyadicInterval& a, const DyadicInterval& b, long precision);

}  // namespace simvol::exact
