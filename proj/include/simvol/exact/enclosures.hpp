#pragma once

// Certified enclosures of pi, sqrt, arcsin, arccos and the principal
// logarithm on the unit circle. Each function returns an interval of width at
// most 2^-bits containing the exact value. Internally the series run in fixed
// point at bits + 32 guard bits with floor/ceil rounding on every term; the
// guard is doubled until the requested width is met.

#include "simvol/exact/dyadic.hpp"
#include "simvol/exact/rational.hpp"

namespace simvol::exact {

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
DyadicInterval pi_enclosure(long bits);

// x >= 0.
DyadicInterval sqrt_enclosure(const Rational& x, long bits);

// -1 <= x <= 1, std::domain_error otherwise.
DyadicInterval arcsin_enclosure(const Rational& x, long bits);

// arccos(x) = pi/2 - arcsin(x). Exact {0} at x = 1; at x = -1 the pi enclosure.
DyadicInterval arccos_enclosure(const Rational& x, long bits);

// arccos(x)/pi, used for rotation numbers.
DyadicInterval arccos_over_pi_enclosure(const Rational& x, long bits);

struct ComplexEnclosure {
  DyadicInterval re;
  DyadicInterval im;
};

// Principal log of the unimodular number re + i*sign*sqrt(1 - re^2), where
// imag_sign is -1, 0 or +1. The result is i*theta with theta in (-pi, pi].
// The branch point z = -1 is rejected with std::domain_error.
ComplexEnclosure ln_unit_enclosure(const Rational& re, int imag_sign, long bits);

// Same for z = re + i*im with rational parts; requires re^2 + im^2 = 1.
ComplexEnclosure ln_enclosure(const Rational& re, const Rational& im, long bits);

namespace detail {

// Fixed-point enclosure [lo, hi] * 2^-precision.
struct FixedInterval {
  Integer lo;
  Integer hi;
  long precision = 0;

  DyadicInterval to_interval() const { return {Dyadic(lo, -precision), Dyadic(hi, -precision)}; }
};

FixedInterval pi_fixed(long precision);
FixedInterval arccos_fixed(const Rational& x, long precision);

}  // namespace detail

}  // namespace simvol::exact
