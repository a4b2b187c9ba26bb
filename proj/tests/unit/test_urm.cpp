#include <doctest.h>

#include <algorithm>
#include <random>

#include "simvol/urm/enumerator.hpp"
#include "simvol/urm/program.hpp"

using namespace simvol::urm;

namespace {

bool halted_with(const RunResult& r, Natural value) {
  const auto* h = std::get_if<Halted>(&r);
  return h != nullptr && h->output == value;
}

}  // namespace

TEST_SUITE("urm") {
  TEST_CASE("interpreter") {
    CHECK(halted_with(run(Program({Succ{1}}), 0, 10), 1));
    CHECK(std::holds_alternative<OutOfFuel>(run(Program({Jump{1, 1, 1}}), 5, 1000)));
    CHECK(halted_with(run(Program({Zero{1}}), 7, 10), 0));
    // doubling: copy R1 to R2, then add 1 to R1 while counting R3 up to R2
    const Program doubler = Program::parse(
        "T 1 2\n"
        "Z 3\n"
        "J 2 3 7\n"
        "S 1\n"
        "S 3\n"
        "J 1 1 3\n");
    CHECK(halted_with(run(doubler, 21, 1000), 42));
    CHECK(std::holds_alternative<OutOfFuel>(run(doubler, 21, 5)));
  }

  TEST_CASE("fuel counts executed instructions") {
    const Program p({Succ{1}, Succ{1}, Succ{1}});
    CHECK(std::holds_alternative<OutOfFuel>(run(p, 0, 2)));
    const auto r = run(p, 0, 3);
    REQUIRE(std::holds_alternative<Halted>(r));
    CHECK(std::get<Halted>(r).steps == 3);
  }

  TEST_CASE("program text round trip and validation") {
    const Program p = Program::parse("# comment\nZ 1\nS 2\n\nT 1 2\nJ 1 2 7\n");
    CHECK(p.size() == 4);
    CHECK(Program::parse(p.to_text()) == p);
    CHECK_THROWS_AS(Program::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Program::parse("Z 0"), std::invalid_argument);
    CHECK_THROWS_AS(Program::parse("Q 1"), std::invalid_argument);
    CHECK_THROWS_AS(Program::parse("J 1 2 0"), std::invalid_argument);
  }

  TEST_CASE("Goedel numbering round trips") {
    const Program one({Zero{1}});
    CHECK(decode(godel_index(one)) == one);
    const Program four({Zero{3}, Succ{2}, Transfer{4, 1}, Jump{1, 2, 9}});
    CHECK(decode(godel_index(four)) == four);
    CHECK(decode(0) == one);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      std::vector<Instruction> code;
      const int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k) {
        const auto a = static_cast<Register>(1 + rng() % 6);
        const auto b = static_cast<Register>(1 + rng() % 6);
        switch (rng() % 4) {
          case 0: code.emplace_back(Zero{a}); break;
          case 1: code.emplace_back(Succ{a}); break;
          case 2: code.emplace_back(Transfer{a, b}); break;
          default: code.emplace_back(Jump{a, b, static_cast<std::uint32_t>(1 + rng() % 8)}); break;
        }
      }
      const Program p(code);
      CHECK(decode(godel_index(p)) == p);
    }
  }

  TEST_CASE("decode is total") {
    for (long i = 0; i < 2000; ++i) CHECK_NOTHROW(decode(i));
    CHECK_NOTHROW(decode(simvol::exact::Integer("123456789012345678901234567890")));
  }

  TEST_CASE("Cantor pairing") {
    for (std::uint64_t z = 0; z < 1000; ++z) {
      const auto [x, y] = cantor_unpair(z);
      CHECK(cantor_pair(x, y) == z);
    }
    CHECK(cantor_pair(simvol::exact::Integer(3), simvol::exact::Integer(4)) == 32);
  }

  TEST_CASE("recursive sets enumerate their prefix") {
    CHECK(named_set("evens").enumerate(11) == std::vector<Natural>{0, 2, 4, 6, 8, 10});
    CHECK(named_set("empty").enumerate(50).empty());
    const auto sq = named_set("squares").enumerate(1001);
    for (Natural n = 0; n <= 1000; ++n) {
      const bool square = [&] {
        for (Natural r = 0; r * r <= n; ++r)
          if (r * r == n) return true;
        return false;
      }();
      CHECK(std::binary_search(sq.begin(), sq.end(), n) == square);
    }
    CHECK_THROWS_AS(named_set("primes-of-doom"), std::invalid_argument);
  }

  TEST_CASE("halting set enumeration is sound, monotone and thread independent") {
    const auto h = ReSetEnumerator::halting_set();
    const std::uint64_t budget = 3000;
    const auto found = h.enumerate(budget);
    CHECK(!found.empty());
    for (Natural n : found) {
      const auto r = run(decode(n), n, budget);
      CHECK(std::holds_alternative<Halted>(r));
    }
    CHECK(h.enumerate(budget, 3) == found);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t b = 1 + rng() % 800;
      const auto small = h.enumerate(b);
      const auto big = h.enumerate(2 * b);
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
  }

  TEST_CASE("the index of [S 1] joins the halting set once its cell is visited") {
    const Natural n = godel_index(Program({Succ{1}})).get_ui();
    const auto h = ReSetEnumerator::halting_set();
    // cell (n, k) runs with fuel min(2^k, t + 1); k = 0 already grants one step
    const std::uint64_t cell = cantor_pair(n, std::uint64_t{0});
    CHECK(h.visit(cell) == std::optional<Natural>(n));
    const auto before = h.enumerate(cell);
    CHECK_FALSE(std::binary_search(before.begin(), before.end(), n));
    const auto after = h.enumerate(cell + 1);
    CHECK(std::binary_search(after.begin(), after.end(), n));
  }

  TEST_CASE("cursor reports each element once") {
    auto c = named_set("odds").cursor();
    std::vector<Natural> seen;
    for (int i = 0; i < 20; ++i)
      if (auto x = c.step()) seen.push_back(*x);
    CHECK(seen == std::vector<Natural>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19});
    CHECK(c.cells_visited() == 20);
  }
}
