#include <doctest.h>

#include <cmath>

#include "mpfr_oracle.hpp"
#include "simvol/fields/relations.hpp"
#include "simvol/scl/rotation.hpp"

using namespace simvol::scl;

namespace {

// 24 arccos(c) / pi from MPFR.
oracle::Bracket alpha_bracket(const Rational& c) {
  oracle::Bracket b;
  oracle::Real arg, pi;
  oracle::set_rational(arg.get(), c, MPFR_RNDU);
  mpfr_acos(b.down.get(), arg.get(), MPFR_RNDD);
  mpfr_mul_ui(b.down.get(), b.down.get(), 24, MPFR_RNDD);
  mpfr_const_pi(pi.get(), MPFR_RNDU);
  mpfr_div(b.down.get(), b.down.get(), pi.get(), MPFR_RNDD);
  oracle::set_rational(arg.get(), c, MPFR_RNDD);
  mpfr_acos(b.up.get(), arg.get(), MPFR_RNDU);
  mpfr_mul_ui(b.up.get(), b.up.get(), 24, MPFR_RNDU);
  mpfr_const_pi(pi.get(), MPFR_RNDD);
  mpfr_div(b.up.get(), b.up.get(), pi.get(), MPFR_RNDU);
  return b;
}

}  // namespace

TEST_SUITE("scl") {
  TEST_CASE("g_n matrices") {
    const Matrix2 g1 = g_matrix(1);
    CHECK(g1.a() == 2);
    CHECK(g1.b() == 2);
    CHECK(g1.c() == -1);
    CHECK(g1.d() == Rational(-1, 2));
    CHECK(g1.trace() == Rational(3, 2));
    const Matrix2 g2 = g_matrix(2);
    CHECK(g2.b() == Rational(3, 2));
    CHECK(g2.trace() == Rational(7, 4));
    for (long n = 1; n <= 64; ++n) {
      const Matrix2 g = g_matrix(n);
      CHECK(g.determinant() == 1);
      CHECK(g.trace() / 2 == Rational(1) - Rational::pow2(-n - 1));
    }
    CHECK_THROWS_AS(g_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(Matrix2(1, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Matrix2(Rational(1, 3), 0, 0, 3), std::invalid_argument);
  }

  TEST_CASE("rotation numbers and scl") {
    CHECK(rot_lift(Matrix2::identity(), 64).contains(Rational(0)));
    CHECK(scl_lift(Matrix2::identity(), 64).contains(Rational(0)));
    const Matrix2 minus(-1, 0, 0, -1);
    CHECK(rot_lift(minus, 64).contains(Rational(1)));
    CHECK(scl_lift(minus, 64).contains(Rational(1, 2)));
    CHECK(rot_lift(g_matrix(1), 50).midpoint_double() == doctest::Approx(std::acos(0.75) / M_PI));
    CHECK_THROWS_AS(rot_lift(Matrix2(2, 1, 1, 1), 10), std::domain_error);
    for (long n = 1; n <= 30; ++n) {
      CHECK(scl_lift(g_matrix(n), 64).scaled(48).intersects(alpha(n, 64).enclosure));
    }
  }

  TEST_CASE("alpha values") {
    const auto a0 = alpha(0, 64);
    REQUIRE(a0.exact.has_value());
    CHECK(*a0.exact == 8);
    CHECK(a0.enclosure.contains(Rational(8)));
    CHECK(a0.enclosure.width_at_most(64));
    CHECK(alpha(1, 40).enclosure.midpoint_double() == doctest::Approx(24 * std::acos(0.75) / M_PI));
    CHECK_FALSE(alpha(1, 40).exact.has_value());
    for (long n = 0; n <= 30; ++n) {
      const auto a = alpha(n, 80);
      CHECK(a.enclosure.width_at_most(80));
      CHECK(oracle::encloses(a.enclosure, alpha_bracket(alpha_cosine(n))));
      if (n > 0) CHECK(a.enclosure.hi() < alpha(n - 1, 80).enclosure.lo());
    }
    CHECK(alpha(30, 64).enclosure.hi().to_rational() < Rational(1, 1000));
  }

  TEST_CASE("simplicial volume scaling") {
    CHECK(simvol_value(0, 3, 64).contains(Rational(24)));
    CHECK(simvol_value(5, 1, 64).intersects(alpha(5, 64).enclosure));
    CHECK(scl_h(0, 2, 64).contains(Rational(1, 3)));
    CHECK_THROWS(simvol_value(1, 0, 64));
  }

  TEST_CASE("Niven filter on the cosines") {
    CHECK(simvol::fields::niven_filter(alpha_cosine(0)));
    for (long n = 1; n <= 30; ++n) CHECK_FALSE(simvol::fields::niven_filter(alpha_cosine(n)));
    CHECK(simvol::fields::niven_filter(Rational(-1, 2)));
    CHECK(simvol::fields::niven_filter(Rational(0)));
    CHECK_FALSE(simvol::fields::niven_filter(Rational(3, 4)));
    CHECK_THROWS_AS(simvol::fields::niven_filter(Rational(3, 2)), std::domain_error);
  }
}
