#include "simvol/exact/dyadic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace simvol::exact {

Dyadic::Dyadic(Integer mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto tz = static_cast<long>(mpz_scan1(mantissa_.get_mpz_t(), 0));
  if (tz > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
    exponent_ += tz;
  }
}

namespace {

// q * 2^precision as a rational.
Rational scale_up(const Rational& q, long precision) { return q * Rational::pow2(precision); }

// Bring both mantissas to the smaller exponent.
std::pair<Integer, Integer> align(const Dyadic& a, const Dyadic& b, long& exponent) {
  exponent = std::min(a.exponent(), b.exponent());
  Integer ma = a.mantissa();
  Integer mb = b.mantissa();
  mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exponent() - exponent));
  mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exponent() - exponent));
  return {ma, mb};
}

}  // namespace

Dyadic Dyadic::floor(const Rational& q, long precision) {
  return Dyadic(exact::floor(scale_up(q, precision)), -precision);
}

Dyadic Dyadic::ceil(const Rational& q, long precision) {
  return Dyadic(exact::ceil(scale_up(q, precision)), -precision);
}

Rational Dyadic::to_rational() const { return Rational(mantissa_) * Rational::pow2(exponent_); }

double Dyadic::to_double() const {
  if (mantissa_ == 0) {
    return 0.0;
  }
  long exp2 = 0;
  const double m = mpz_get_d_2exp(&exp2, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(exp2 + exponent_));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  long e = 0;
  auto [ma, mb] = align(a, b, e);
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  long e = 0;
  auto [ma, mb] = align(a, b, e);
  return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  long e = 0;
  auto [ma, mb] = align(a, b, e);
  const int c = cmp(ma, mb);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("dyadic interval with lo > hi");
  }
}

DyadicInterval DyadicInterval::around(const Rational& q, long precision) {
  return {Dyadic::floor(q, precision), Dyadic::ceil(q, precision)};
}

bool DyadicInterval::width_at_most(long bits) const {
  return width() <= Dyadic(Integer(1), -bits);
}

bool DyadicInterval::contains(const Rational& q) const {
  return lo_.to_rational() <= q && q <= hi_.to_rational();
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  return lo_ <= other.lo_ && other.hi_ <= hi_;
}

bool DyadicInterval::intersects(const DyadicInterval& other) const {
  return !(hi_ < other.lo_ || other.hi_ < lo_);
}

double DyadicInterval::midpoint_double() const { return (lo_ + hi_).shifted(-1).to_double(); }

DyadicInterval DyadicInterval::round_outward(long precision) const {
  return {Dyadic::floor(lo_.to_rational(), precision), Dyadic::ceil(hi_.to_rational(), precision)};
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const std::array<Dyadic, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

DyadicInterval DyadicInterval::scaled(const Integer& factor) const {
  const Dyadic f(factor, 0);
  if (factor >= 0) {
    return {lo_ * f, hi_ * f};
  }
  return {hi_ * f, lo_ * f};
}

DyadicInterval DyadicInterval::abs() const {
  if (lo_.sign() >= 0) {
    return *this;
  }
  if (hi_.sign() <= 0) {
    return -*this;
  }
  return {Dyadic(0), std::max(-lo_, hi_)};
}

DyadicInterval divide(const DyadicInterval& a, const DyadicInterval& b, long precision) {
  if (b.lo().sign() <= 0 && b.hi().sign() >= 0) {
    throw std::domain_error("interval division by an interval containing zero");
  }
  const std::array<Rational, 4> q{a.lo().to_rational() / b.lo().to_rational(),
                                  a.lo().to_rational() / b.hi().to_rational(),
                                  a.hi().to_rational() / b.lo().to_rational(),
                                  a.hi().to_rational() / b.hi().to_rational()};
  const auto [mn, mx] = std::minmax_element(q.begin(), q.end());
  return {Dyadic::floor(*mn, precision), Dyadic::ceil(*mx, precision)};
}

}  // namespace simvol::exact
