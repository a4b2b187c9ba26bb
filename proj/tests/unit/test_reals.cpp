#include <doctest.h>

#include <random>
#include <set>

#include "simvol/reals/operations.hpp"
#include "simvol/reals/stream.hpp"

using namespace simvol::reals;
using simvol::urm::Natural;
using simvol::urm::ReSetEnumerator;

namespace {

// x_A for A = multiples of 3 is 1 / (1 - 1/8) = 8/7.
ReSetEnumerator thirds() {
  return ReSetEnumerator::recursive("thirds", [](Natural n) { return n % 3 == 0; });
}

// Upper bounds 8/7 + 1/k for the 8/7 fixture.
UpperBoundStream eight_sevenths() {
  auto k = std::make_shared<long>(0);
  return UpperBoundStream::from_function(
      [k] { return std::optional<Rational>(Rational(8, 7) + Rational(1, ++*k)); }, Rational(8, 7));
}

UpperBoundStream harmonic() {
  auto k = std::make_shared<long>(0);
  return UpperBoundStream::from_function([k] { return std::optional<Rational>(Rational(1, ++*k)); }, Rational(0));
}

template <class S>
Rational run(S& s, int steps) {
  for (int i = 0; i < steps; ++i) s.step();
  return *s.best();
}

}  // namespace

TEST_SUITE("reals") {
  TEST_CASE("mul_nonneg") {
    auto six = mul_nonneg(UpperBoundStream::constant(2), UpperBoundStream::constant(3));
    CHECK(run(six, 4) == 6);
    auto one = mul_nonneg(eight_sevenths(), UpperBoundStream::constant(Rational(7, 8)));
    const Rational b = run(one, 4000);
    CHECK(b >= 1);
    CHECK(b - 1 < Rational(1, 1000));
    auto zero = mul_nonneg(harmonic(), UpperBoundStream::constant(5));
    CHECK(run(zero, 2000) <= Rational(1, 100));
    auto bad = mul_nonneg(UpperBoundStream::constant(-1), UpperBoundStream::constant(1));
    CHECK_THROWS_AS(run(bad, 4), ContractViolation);
  }

  TEST_CASE("mul_nonneg infimum matches exact products on random fixtures") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
      const Rational a(static_cast<long>(rng() % 50), static_cast<long>(1 + rng() % 30));
      const Rational c(static_cast<long>(rng() % 50), static_cast<long>(1 + rng() % 30));
      auto p = mul_nonneg(UpperBoundStream::constant(a), UpperBoundStream::constant(c));
      CHECK(run(p, 6) == a * c);
    }
  }

  TEST_CASE("unscale") {
    auto three = unscale(UpperBoundStream::constant(6), ComputableReal::exact(2));
    CHECK(run(three, 6) == 3);
    auto same = unscale(eight_sevenths(), ComputableReal::exact(1));
    CHECK(run(same, 400) - Rational(8, 7) < Rational(1, 100));
    // c whose lower bounds start at 0 stalls first, then emits
    auto k = std::make_shared<long>(0);
    ComputableReal slow{UpperBoundStream::constant(2), LowerBoundStream::from_function([k] {
                          return std::optional<Rational>(++*k < 5 ? Rational(0) : Rational(2));
                        })};
    auto s = unscale(UpperBoundStream::constant(6), std::move(slow));
    int stalls = 0;
    while (!s.step()) ++stalls;
    CHECK(stalls > 0);
    CHECK(run(s, 4) == 3);
  }

  TEST_CASE("Specker streams") {
    auto evens = specker(simvol::urm::named_set("evens"));
    const Rational lo = run(evens.lower, 40);
    CHECK(lo <= Rational(4, 3));
    CHECK(Rational(4, 3) - lo <= Rational::pow2(-20));
    const Rational up = run(evens.complement_upper, 40);
    CHECK(up >= Rational(2, 3));
    CHECK(up - Rational(2, 3) <= Rational::pow2(-20));

    auto empty = specker(simvol::urm::named_set("empty"));
    CHECK(run(empty.lower, 10) == 0);
    CHECK(run(empty.complement_upper, 10) == 2);
    auto all = specker(simvol::urm::named_set("all"));
    CHECK(Rational(2) - run(all.lower, 30) <= Rational::pow2(-28));
  }

  TEST_CASE("Specker streams are monotone") {
    auto h = specker(ReSetEnumerator::halting_set());
    Rational prev_lo(0), prev_up(2);
    for (int i = 0; i < 500; ++i) {
      if (auto q = h.lower.step()) {
        CHECK(*q >= prev_lo);
        prev_lo = *q;
      }
      if (auto q = h.complement_upper.step()) {
        CHECK(*q <= prev_up);
        prev_up = *q;
      }
    }
  }

  TEST_CASE("two-sided Specker numbers of recursive sets sandwich the value") {
    auto x = specker_computable(thirds());
    for (int i = 0; i < 40; ++i) {
      const auto u = x.upper.step();
      const auto l = x.lower.step();
      if (u) CHECK(*u >= Rational(8, 7));
      if (l) CHECK(*l <= Rational(8, 7));
    }
    CHECK(*x.upper.best() - *x.lower.best() <= Rational::pow2(-20));
    CHECK_THROWS_AS(specker_computable(ReSetEnumerator::halting_set()), std::invalid_argument);
  }

  TEST_CASE("inf_ratio") {
    auto succ = inf_ratio(profile_pairs([](std::uint64_t m) { return m + 1; }));
    bool reached = false;
    for (int i = 0; i < (1 << 11) && !reached; ++i) {
      succ.step();
      reached = succ.best() && *succ.best() <= Rational(1) + Rational::pow2(-10);
    }
    CHECK(reached);
    CHECK(*succ.best() > 1);

    auto circle = inf_ratio(profile_pairs([](std::uint64_t) { return 1; }));
    CHECK(run(circle, 400) <= Rational(1, 100));
    auto triple = inf_ratio(profile_pairs([](std::uint64_t m) { return 3 * m; }));
    CHECK(run(triple, 200) == 3);

    int warnings = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{0, 4}, {2, 3}};
    std::size_t next = 0;
    auto skip = inf_ratio([&]() -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
      if (next < pairs.size()) return pairs[next++];
      return std::nullopt;
    }, [&](const std::string&) { ++warnings; });
    CHECK_FALSE(skip.step().has_value());
    CHECK(*skip.step() == Rational(3, 2));
    CHECK(warnings == 1);
  }

  TEST_CASE("profile pairs enumerate the upward closed set once") {
    auto f = [](std::uint64_t m) { return 2 * m; };
    auto src = profile_pairs(f);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (int i = 0; i < 5000; ++i) {
      if (auto p = src()) {
        CHECK(p->first >= 1);
        CHECK(p->second >= f(p->first));
        CHECK(seen.insert(*p).second);
      }
    }
    for (std::uint64_t m = 1; m <= 5; ++m)
      for (std::uint64_t n = f(m); n < f(m) + 5; ++n) CHECK(seen.count({m, n}) == 1);
  }

  TEST_CASE("semi_lt") {
    auto a = eight_sevenths();
    CHECK(semi_lt(a, 2, 10) == SemiResult::ConfirmedBelow);
    auto b = eight_sevenths();
    CHECK(semi_lt(b, 1, 1000) == SemiResult::Unknown);
    auto evens = specker_computable(simvol::urm::named_set("evens"));
    CHECK(semi_lt(evens.upper, Rational(27, 20), 64) == SemiResult::ConfirmedBelow);
    auto evens2 = specker_computable(simvol::urm::named_set("evens"));
    CHECK(semi_lt(evens2.upper, Rational(4, 3), 200) == SemiResult::Unknown);
  }

  TEST_CASE("upper cut enumeration") {
    CutEnumerator cut(UpperBoundStream::constant(Rational(1, 2)));
    for (int i = 0; i < 300; ++i) {
      if (auto x = cut.step()) CHECK(*x > Rational(1, 2));
    }
    CHECK(calkin_wilf(0) == 1);
    CHECK(calkin_wilf(1) == Rational(1, 2));
    CHECK(calkin_wilf(2) == 2);
    CHECK(calkin_wilf(3) == Rational(1, 3));
  }
}
