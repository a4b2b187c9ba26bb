#include "simvol/scl/rotation.hpp"

#include <stdexcept>

#include "simvol/exact/enclosures.hpp"

namespace simvol::scl {

using exact::Dyadic;
using exact::Integer;

namespace {

bool power_of_two(const Integer& v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; }

// Scale an enclosure by a positive rational with outward rounding and the
// same adaptive guard logic as the kernel: the caller passes a generator for
// a given working precision.
template <typename F>
DyadicInterval refine(long bits, F&& at_precision) {
  if (bits < 1) {
    throw std::invalid_argument("precision must be at least 1 bit");
  }
  for (long guard = 32;; guard *= 2) {
    const DyadicInterval out = at_precision(bits + guard).round_outward(bits + 1);
    if (out.width_at_most(bits)) {
      return out;
    }
  }
}

DyadicInterval times_rational(const DyadicInterval& v, const Rational& r, long precision) {
  const DyadicInterval num(Dyadic(r.numerator(), 0));
  const DyadicInterval den(Dyadic(r.denominator(), 0));
  return exact::divide(v * num, den, precision);
}

}  // namespace

Matrix2::Matrix2(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  for (const Rational* e : {&a_, &b_, &c_, &d_}) {
    if (!power_of_two(e->denominator())) {
      throw std::invalid_argument("matrix entry " + e->str() + " is not in Z[1/2]");
    }
  }
  if (determinant() != Rational(1)) {
    throw std::invalid_argument("matrix determinant is " + determinant().str() + ", expected 1");
  }
}

Matrix2 g_matrix(long n) {
  if (n < 1) {
    throw std::invalid_argument("g_n is defined for n >= 1");
  }
  return {Rational(2), Rational(1) + Rational::pow2(1 - n), Rational(-1), -Rational::pow2(-n)};
}

DyadicInterval rot_lift(const Matrix2& g, long bits) {
  const Rational half_trace = g.trace() / Rational(2);
  if (half_trace.abs() > Rational(1)) {
    throw std::domain_error("rotation number formula needs |tr| <= 2, got tr = " + g.trace().str());
  }
  return exact::arccos_over_pi_enclosure(half_trace, bits);
}

DyadicInterval scl_lift(const Matrix2& g, long bits) {
  return rot_lift(g, bits + 1).abs().shifted(-1);
}

Rational alpha_cosine(long n) {
  if (n < 0) {
    throw std::invalid_argument("alpha_n needs n >= 0");
  }
  return Rational(1) - Rational::pow2(-n - 1);
}

AlphaValue alpha(long n, long bits) {
  const Rational x = alpha_cosine(n);
  AlphaValue out{n, refine(bits, [&](long p) {
                   return exact::arccos_over_pi_enclosure(x, p).scaled(Integer(24));
                 }),
                 std::nullopt};
  if (n == 0) {
    out.exact = Rational(8);
  }
  return out;
}

DyadicInterval simvol_value(long n, long K, long bits) {
  if (K < 1) {
    throw std::invalid_argument("K must be a positive integer");
  }
  return refine(bits, [&](long p) { return alpha(n, p).enclosure.scaled(Integer(K)); });
}

DyadicInterval scl_h(long n, long K, long bits) {
  if (K < 1) {
    throw std::invalid_argument("K must be a positive integer");
  }
  return refine(bits, [&](long p) {
    return times_rational(alpha(n, p).enclosure, Rational(Integer(K), Integer(48)), p);
  });
}

}  // namespace simvol::scl
