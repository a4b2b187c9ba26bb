#include "simvol/exact/enclosures.hpp"

#include <stdexcept>

namespace simvol::exact {

namespace {

constexpr long kGuardBits = 32;

Integer pow2(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return p;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer cdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// atan(1/x) * 2^precision. Each term carries less than 3 ulps of truncation
// error and the tail after the last nonzero power is below 2 ulps.
detail::FixedInterval atan_inverse_fixed(long x, long precision) {
  const Integer one = pow2(precision);
  const Integer xx = Integer(x) * x;
  Integer power = fdiv(one, Integer(x));
  Integer sum = 0;
  long terms = 0;
  for (long k = 0; power != 0; ++k, ++terms) {
    const Integer term = fdiv(power, Integer(2 * k + 1));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power = fdiv(power, xx);
  }
  const Integer slack = Integer(3 * terms + 2);
  return {sum - slack, sum + slack, precision};
}

// arcsin(y) for y in [ylo, yhi] * 2^-precision with 0 <= ylo <= yhi and
// yhi <= ~1/2. Lower bound from floor-rounded terms at ylo, upper bound from
// ceil-rounded terms at yhi plus a geometric tail bound.
detail::FixedInterval arcsin_small_fixed(const Integer& ylo, const Integer& yhi, long precision) {
  const Integer one = pow2(precision);

  Integer lo = 0;
  if (ylo > 0) {
    const Integer y2 = fdiv(ylo * ylo, one);
    Integer t = ylo;
    lo = t;
    for (long k = 0; t != 0; ++k) {
      const Integer num = Integer((2 * k + 1) * (2 * k + 1));
      const Integer den = Integer((2 * k + 2) * (2 * k + 3));
      t = fdiv(t * y2 * num, one * den);
      lo += t;
    }
  }

  Integer hi = 0;
  if (yhi > 0) {
    const Integer y2 = cdiv(yhi * yhi, one);
    Integer t = yhi;
    hi = t;
    for (long k = 0; t > 1; ++k) {
      const Integer num = Integer((2 * k + 1) * (2 * k + 1));
      const Integer den = Integer((2 * k + 2) * (2 * k + 3));
      t = cdiv(t * y2 * num, one * den);
      hi += t;
    }
    // Remaining terms sum to at most t * y^2 / (1 - y^2) <= t.
    hi += t;
  }
  return {lo, hi, precision};
}

detail::FixedInterval half(const detail::FixedInterval& v) {
  return {fdiv(v.lo, Integer(2)), cdiv(v.hi, Integer(2)), v.precision};
}

detail::FixedInterval arcsin_fixed(const Rational& x, long precision) {
  if (x.abs() > Rational(1)) {
    throw std::domain_error("arcsin argument outside [-1, 1]");
  }
  const int s = x.sign();
  const Rational a = x.abs();
  detail::FixedInterval r;
  if (a <= Rational(1, 2)) {
    const Rational scaled = a * Rational::pow2(precision);
    r = arcsin_small_fixed(floor(scaled), ceil(scaled), precision);
  } else {
    // arcsin(a) = pi/2 - 2 arcsin(sqrt((1 - a)/2))
    const Rational u = (Rational(1) - a) / Rational(2);
    Integer root;
    const Integer radicand = floor(u * Rational::pow2(2 * precision));
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    const detail::FixedInterval inner =
        u.is_zero() ? detail::FixedInterval{0, 0, precision}
                    : arcsin_small_fixed(root, root + 1, precision);
    const detail::FixedInterval half_pi = half(detail::pi_fixed(precision));
    r = {half_pi.lo - 2 * inner.hi, half_pi.hi - 2 * inner.lo, precision};
  }
  if (s < 0) {
    return {-r.hi, -r.lo, precision};
  }
  return r;
}

template <typename Compute>
DyadicInterval adaptive(long bits, Compute&& compute) {
  if (bits < 1) {
    throw std::invalid_argument("enclosure precision must be at least 1 bit");
  }
  for (long guard = kGuardBits;; guard *= 2) {
    const DyadicInterval raw = compute(bits + guard);
    const DyadicInterval out = raw.round_outward(bits + 1);
    if (out.width_at_most(bits)) {
      return out;
    }
  }
}

}  // namespace

namespace detail {

FixedInterval pi_fixed(long precision) {
  const FixedInterval a = atan_inverse_fixed(5, precision);
  const FixedInterval b = atan_inverse_fixed(239, precision);
  return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo, precision};
}

FixedInterval arccos_fixed(const Rational& x, long precision) {
  if (x.abs() > Rational(1)) {
    throw std::domain_error("arccos argument outside [-1, 1]");
  }
  if (x == Rational(1)) {
    return {0, 0, precision};
  }
  if (x == Rational(-1)) {
    return pi_fixed(precision);
  }
  const FixedInterval half_pi = half(pi_fixed(precision));
  const FixedInterval as = arcsin_fixed(x, precision);
  return {half_pi.lo - as.hi, half_pi.hi - as.lo, precision};
}

}  // namespace detail

DyadicInterval pi_enclosure(long bits) {
  return adaptive(bits, [](long p) { return detail::pi_fixed(p).to_interval(); });
}

DyadicInterval sqrt_enclosure(const Rational& x, long bits) {
  if (x.sign() < 0) {
    throw std::domain_error("sqrt of a negative rational");
  }
  return adaptive(bits, [&](long p) {
    Integer root;
    const Integer radicand = floor(x * Rational::pow2(2 * p));
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    const bool exact = root * root == radicand && Rational(radicand) == x * Rational::pow2(2 * p);
    return DyadicInterval(Dyadic(root, -p), Dyadic(exact ? root : root + 1, -p));
  });
}

DyadicInterval arcsin_enclosure(const Rational& x, long bits) {
  if (x.abs() > Rational(1)) {
    throw std::domain_error("arcsin argument outside [-1, 1]");
  }
  return adaptive(bits, [&](long p) { return arcsin_fixed(x, p).to_interval(); });
}

DyadicInterval arccos_enclosure(const Rational& x, long bits) {
  if (x.abs() > Rational(1)) {
    throw std::domain_error("arccos argument outside [-1, 1]");
  }
  if (x == Rational(1)) {
    return DyadicInterval(Dyadic(0));
  }
  return adaptive(bits, [&](long p) { return detail::arccos_fixed(x, p).to_interval(); });
}

DyadicInterval arccos_over_pi_enclosure(const Rational& x, long bits) {
  if (x.abs() > Rational(1)) {
    throw std::domain_error("arccos argument outside [-1, 1]");
  }
  if (x == Rational(1)) {
    return DyadicInterval(Dyadic(0));
  }
  if (x == Rational(-1)) {
    return DyadicInterval(Dyadic(1));
  }
  return adaptive(bits, [&](long p) {
    const DyadicInterval num = detail::arccos_fixed(x, p).to_interval();
    const DyadicInterval den = detail::pi_fixed(p).to_interval();
    return divide(num, den, p);
  });
}

ComplexEnclosure ln_unit_enclosure(const Rational& re, int imag_sign, long bits) {
  if (re.abs() > Rational(1)) {
    throw std::domain_error("real part of a unimodular number outside [-1, 1]");
  }
  if (re == Rational(-1)) {
    throw std::domain_error("principal logarithm branch point z = -1");
  }
  if ((re.abs() == Rational(1)) != (imag_sign == 0)) {
    throw std::domain_error("imaginary sign inconsistent with |z| = 1");
  }
  DyadicInterval theta = arccos_enclosure(re, bits);
  if (imag_sign < 0) {
    theta = -theta;
  }
  return {DyadicInterval(Dyadic(0)), theta};
}

ComplexEnclosure ln_enclosure(const Rational& re, const Rational& im, long bits) {
  if (re * re + im * im != Rational(1)) {
    throw std::domain_error("ln_enclosure requires |z| = 1");
  }
  return ln_unit_enclosure(re, im.sign(), bits);
}

}  // namespace simvol::exact
