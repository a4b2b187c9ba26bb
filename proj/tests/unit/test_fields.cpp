#include <doctest.h>

#include <random>

#include "simvol/fields/multiquadratic.hpp"
#include "simvol/fields/relations.hpp"

using namespace simvol::fields;
using simvol::exact::Integer;
using simvol::exact::Rational;

namespace {

FieldElement random_element(const BasisPtr& b, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < b->dimension(); ++i) {
    c.emplace_back(static_cast<long>(rng() % 21) - 10, static_cast<long>(1 + rng() % 6));
  }
  return FieldElement(b, c);
}

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("basis validation") {
    CHECK_THROWS_AS(make_basis({Integer(4)}), std::invalid_argument);
    CHECK_THROWS_AS(make_basis({Integer(6), Integer(10)}), std::invalid_argument);
    CHECK_THROWS_AS(make_basis({Integer(1)}), std::invalid_argument);
    const auto b = make_basis({Integer(7), Integer(3)});
    CHECK(b->radicands() == std::vector<Integer>{3, 7});
    CHECK(b->dimension() == 8);
  }

  TEST_CASE("field arithmetic examples") {
    const auto b = make_basis({Integer(3), Integer(7)});
    const auto s3 = FieldElement::sqrt_of(b, 3);
    const auto s7 = FieldElement::sqrt_of(b, 7);
    const auto i = FieldElement::imaginary_unit(b);
    CHECK(s3 * s3 == FieldElement::rational(b, 3));
    const auto lhs = (i * s3) * (i * s7);
    CHECK(lhs == -(s3 * s7));
    CHECK(i * i == FieldElement::rational(b, -1));
    const auto x = FieldElement::rational(b, 1) + i + s3;
    CHECK(x * x.inverse() == FieldElement::rational(b, 1));
    CHECK(field_arith(x, x, FieldOp::Sub).is_zero());
    CHECK_THROWS_AS(FieldElement::zero(b).inverse(), std::domain_error);
    const auto other = make_basis({Integer(5)});
    CHECK_THROWS_AS(x + FieldElement::sqrt_of(other, 5), std::invalid_argument);
  }

  TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(13);
    for (const auto& rads : std::vector<std::vector<Integer>>{{}, {2}, {3, 7}, {3, 7, 31}}) {
      const auto b = make_basis(rads);
      for (int t = 0; t < 200; ++t) {
        const auto x = random_element(b, rng), y = random_element(b, rng), z = random_element(b, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        if (t % 20 == 0 && !x.is_zero()) CHECK(x * x.inverse() == FieldElement::rational(b, 1));
      }
    }
  }

  TEST_CASE("exact arithmetic commutes with the numeric embedding") {
    std::mt19937_64 rng(17);
    const auto b = make_basis({Integer(3), Integer(7), Integer(31)});
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(b, rng), y = random_element(b, rng);
      const auto ex = embed(x, 200), ey = embed(y, 200);
      const auto prod = embed(x * y, 200);
      const auto num = ex * ey;
      CHECK(num.re.intersects(prod.re));
      CHECK(num.im.intersects(prod.im));
      const auto sum = embed(x + y, 200);
      CHECK((ex.re + ey.re).intersects(sum.re));
      CHECK((ex.im + ey.im).intersects(sum.im));
    }
  }

  TEST_CASE("gamma values") {
    const auto g2 = simvol::fields::gamma(2);
    const auto b2 = g2.basis();
    CHECK(g2 == FieldElement::rational(b2, Rational(1, 2)) +
                    FieldElement::imaginary_unit(b2) * FieldElement::sqrt_of(b2, 3).scaled(Rational(1, 2)));
    const auto g3 = simvol::fields::gamma(3);
    const auto b3 = g3.basis();
    CHECK(g3 == FieldElement::rational(b3, Rational(3, 4)) +
                    FieldElement::imaginary_unit(b3) * FieldElement::sqrt_of(b3, 7).scaled(Rational(1, 4)));
    const auto g5 = simvol::fields::gamma(5);
    CHECK(g5.coeff(0) == Rational(15, 16));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      const auto g = simvol::fields::gamma(p);
      CHECK(g * g.conjugate() == FieldElement::rational(g.basis(), 1));
    }
    CHECK_THROWS_AS(simvol::fields::gamma(4), std::invalid_argument);
    CHECK(g2.pow(3) == FieldElement::rational(b2, -1));
    CHECK(g2.pow(6) == FieldElement::rational(b2, 1));
  }

  TEST_CASE("Mersenne gcds") {
    CHECK(mersenne_gcd(3, 5) == 1);
    CHECK(mersenne_gcd(2, 3) == 1);
    CHECK(mersenne_gcd(4, 6) == 3);
    CHECK_FALSE(mersenne_coprime(4, 6));
    const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (long p : primes)
      for (long q : primes)
        if (p != q) CHECK(mersenne_coprime(p, q));
    for (long p = 2; p <= 20; ++p)
      for (long q = 2; q <= 20; ++q) {
        if (p == q) continue;
        long a = p, c = q;
        while (c != 0) {
          const long t = a % c;
          a = c;
          c = t;
        }
        CHECK(mersenne_coprime(p, q) == (a == 1));
      }
    CHECK_THROWS_AS(mersenne_coprime(5, 5), std::invalid_argument);
  }

  TEST_CASE("power expansion") {
    const auto e = power_expansion_check(2, 3);
    CHECK_FALSE(e.q2_nonzero);
    CHECK(e.power == FieldElement::rational(e.power.basis(), -1));
    CHECK(power_expansion_check(3, 1).q2 == Rational(1, 4));
    for (long p : {2L, 3L, 5L, 7L})
      for (long n = 1; n <= 20; ++n) CHECK_NOTHROW(power_expansion_check(p, n));
    for (long n = 1; n <= 20; ++n) CHECK(power_expansion_check(3, n).q2_nonzero);
  }

  TEST_CASE("subfield membership") {
    const auto b = mersenne_basis({3, 5});
    CHECK_FALSE(subfield_membership(FieldElement::sqrt_of(b, 31), 31));
    CHECK(subfield_membership(FieldElement::rational(b, 1) + FieldElement::imaginary_unit(b), 31));
    CHECK(subfield_membership(simvol::fields::gamma(3, b).pow(-2), 31));
    CHECK_THROWS_AS(subfield_membership(FieldElement::rational(b, 1), 11), std::invalid_argument);
  }

  TEST_CASE("exact relation search") {
    CHECK(relation_search_exact({3, 5}, 4).empty());
    CHECK(relation_search_exact({3, 5, 7}, 3).empty());
    CHECK(relation_search_exact({3, 5, 7}, 3, 4).empty());
    CHECK(relation_search_exact({2}, 6) == std::vector<Relation>{{-6}, {6}});
    CHECK_THROWS(relation_search_exact({3, 5, 7, 11, 13, 17}, 10));
    const auto s = subfield_exclusion_check({3, 5, 7}, 3);
    CHECK(s.violations.empty());
    CHECK(s.tuples_checked > 0);
  }

  TEST_CASE("numeric relation search") {
    const auto none = relation_search_numeric({3, 5, 7}, 10, 256);
    CHECK(none.kind == NumericVerdictKind::NoRelationFound);
    CHECK(none.margin.sign() > 0);
    const auto two = relation_search_numeric({2}, 6, 128);
    CHECK(two.kind == NumericVerdictKind::RelationConfirmed);
    bool found = false;
    for (const auto& c : two.candidates) {
      // coefficients are (pi, theta_2): 6 arccos(1/2) - 2 pi = 0
      if (c.confirmed && c.coeffs == std::vector<long>{-2, 6}) found = true;
      if (c.confirmed && c.coeffs == std::vector<long>{2, -6}) found = true;
    }
    CHECK(found);
    CHECK(relation_search_numeric({}, 5, 128).kind == NumericVerdictKind::NoRelationFound);
    CHECK_THROWS(relation_search_numeric({3}, 5, 64));
  }
}
