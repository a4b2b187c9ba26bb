#include <doctest.h>

#include <random>

#include "mpfr_oracle.hpp"
#include "simvol/exact/dyadic.hpp"
#include "simvol/exact/enclosures.hpp"
#include "simvol/exact/rational.hpp"

using namespace simvol::exact;

namespace {

oracle::Bracket pi_bracket() {
  oracle::Bracket b;
  mpfr_const_pi(b.down.get(), MPFR_RNDD);
  mpfr_const_pi(b.up.get(), MPFR_RNDU);
  return b;
}

// arccos is decreasing: round the argument against the direction of the result.
oracle::Bracket acos_bracket(const Rational& x, bool over_pi = false) {
  oracle::Bracket b;
  oracle::Real arg, pi;
  oracle::set_rational(arg.get(), x, MPFR_RNDU);
  mpfr_acos(b.down.get(), arg.get(), MPFR_RNDD);
  oracle::set_rational(arg.get(), x, MPFR_RNDD);
  mpfr_acos(b.up.get(), arg.get(), MPFR_RNDU);
  if (over_pi) {
    mpfr_const_pi(pi.get(), MPFR_RNDU);
    mpfr_div(b.down.get(), b.down.get(), pi.get(), MPFR_RNDD);
    mpfr_const_pi(pi.get(), MPFR_RNDD);
    mpfr_div(b.up.get(), b.up.get(), pi.get(), MPFR_RNDU);
  }
  return b;
}

oracle::Bracket sqrt_bracket(const Rational& x) {
  oracle::Bracket b;
  oracle::Real arg;
  oracle::set_rational(arg.get(), x, MPFR_RNDD);
  mpfr_sqrt(b.down.get(), arg.get(), MPFR_RNDD);
  oracle::set_rational(arg.get(), x, MPFR_RNDU);
  mpfr_sqrt(b.up.get(), arg.get(), MPFR_RNDU);
  return b;
}

Rational random_unit_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 1'000'000);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-d, d);
  return Rational(num(rng)) / Rational(d);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(*rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add) == Rational(5, 6));
    const Rational two_quarters(2, 4);
    CHECK(two_quarters.numerator() == 1);
    CHECK(two_quarters.denominator() == 2);
    CHECK(*rational_arith(two_quarters, 1, ArithOp::Mul) == Rational(1, 2));
    CHECK(Rational(1) - Rational::pow2(-2) == Rational(3, 4));
    CHECK_FALSE(rational_arith(1, 0, ArithOp::Div).has_value());
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() > 0);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK(ceil(Rational(-1, 2)) == 0);
  }

  TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const Rational a = random_unit_rational(rng), b = random_unit_rational(rng), c = random_unit_rational(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
  }

  TEST_CASE("dyadic interval arithmetic encloses exact results") {
    const DyadicInterval a = DyadicInterval::around(Rational(1, 3), 40);
    const DyadicInterval b = DyadicInterval::around(Rational(-2, 7), 40);
    CHECK(a.contains(Rational(1, 3)));
    CHECK((a + b).contains(Rational(1, 3) + Rational(-2, 7)));
    CHECK((a - b).contains(Rational(1, 3) - Rational(-2, 7)));
    CHECK((a * b).contains(Rational(1, 3) * Rational(-2, 7)));
    CHECK(divide(a, b, 60).contains(Rational(1, 3) / Rational(-2, 7)));
    CHECK_THROWS_AS(divide(a, DyadicInterval::around(Rational(0), 10), 60), std::domain_error);
  }

  TEST_CASE("pi enclosure") {
    const auto p10 = pi_enclosure(10);
    CHECK(p10.lo().to_rational() >= Rational::parse("3140/1000"));
    CHECK(p10.hi().to_rational() <= Rational::parse("3143/1000"));
    for (long bits : {1L, 10L, 53L, 200L, 700L}) {
      const auto p = pi_enclosure(bits);
      CHECK(p.width_at_most(bits));
      CHECK(oracle::encloses(p, pi_bracket()));
    }
  }

  TEST_CASE("doubling the precision never widens the enclosure") {
    for (long bits : {8L, 20L, 64L, 128L}) {
      CHECK(pi_enclosure(bits).width() >= pi_enclosure(2 * bits).width());
      CHECK(arccos_enclosure(Rational(3, 4), bits).width() >= arccos_enclosure(Rational(3, 4), 2 * bits).width());
    }
  }

  TEST_CASE("arccos at fixed points") {
    const auto one = arccos_enclosure(1, 64);
    CHECK(one.contains(Rational(0)));
    CHECK(one.width_at_most(64));
    CHECK(oracle::encloses(arccos_enclosure(Rational(1, 2), 80), acos_bracket(Rational(1, 2))));
    CHECK(arccos_enclosure(Rational(3, 4), 60).midpoint_double() == doctest::Approx(0.7227342478134157));
    CHECK(oracle::encloses(arccos_enclosure(-1, 64), pi_bracket()));
    CHECK_THROWS_AS(arccos_enclosure(Rational(5, 4), 10), std::domain_error);
    CHECK_THROWS_AS(arccos_enclosure(Rational(-5, 4), 10), std::domain_error);
  }

  TEST_CASE("arccos, arccos/pi and sqrt agree with the MPFR oracle on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
      const Rational x = random_unit_rational(rng);
      const long bits = 16 + static_cast<long>(rng() % 200);
      const auto a = arccos_enclosure(x, bits);
      CHECK(a.width_at_most(bits));
      CHECK(oracle::encloses(a, acos_bracket(x)));
      CHECK(oracle::encloses(arccos_over_pi_enclosure(x, bits), acos_bracket(x, true)));
      const Rational y = x.abs() * Rational(37);
      CHECK(oracle::encloses(sqrt_enclosure(y, bits), sqrt_bracket(y)));
    }
  }

  TEST_CASE("arccos(x) + arccos(-x) contains pi") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      const Rational x = random_unit_rational(rng);
      const auto sum = arccos_enclosure(x, 100) + arccos_enclosure(-x, 100);
      CHECK(sum.intersects(pi_enclosure(100)));
    }
  }

  TEST_CASE("logarithm on the unit circle") {
    const auto one = ln_unit_enclosure(1, 0, 64);
    CHECK(one.re.contains(Rational(0)));
    CHECK(one.im.contains(Rational(0)));
    const auto sixth = ln_unit_enclosure(Rational(1, 2), 1, 90);
    CHECK(sixth.re.contains(Rational(0)));
    CHECK(oracle::encloses(sixth.im, acos_bracket(Rational(1, 2))));
    const auto quarter = ln_enclosure(0, 1, 90);
    CHECK(quarter.re.contains(Rational(0)));
    CHECK(oracle::encloses(quarter.im, acos_bracket(Rational(0))));
    const auto below = ln_unit_enclosure(Rational(1, 2), -1, 90);
    CHECK(below.im.hi().sign() < 0);
    CHECK_THROWS_AS(ln_unit_enclosure(-1, 0, 64), std::domain_error);
    CHECK_THROWS(ln_enclosure(1, 1, 64));
  }
}
