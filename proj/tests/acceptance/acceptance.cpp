// One PASS/FAIL line per acceptance criterion, with wall time against the
// allowed runtime. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>

#include "mpfr_oracle.hpp"
#include "simvol/fields/relations.hpp"
#include "simvol/l1/homology.hpp"
#include "simvol/l1/io.hpp"
#include "simvol/l1/search.hpp"
#include "simvol/reals/operations.hpp"
#include "simvol/scl/rotation.hpp"
#include "simvol/urm/enumerator.hpp"

using namespace simvol;
using exact::Rational;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s [%02d] %s (%.3fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id, title, secs, limit_seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  if (!in_time) std::printf("     [%02d] exceeded the runtime limit\n", id);
  std::fflush(stdout);
}

std::string fixture(const std::string& name) { return std::string(SIMVOL_FIXTURES) + "/" + name; }

// 24 arccos(c) / pi from MPFR, c in [-1, 1].
oracle::Bracket alpha_oracle(const Rational& c) {
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

int main() {
  criterion(1, "alpha_0 = 8 exactly, 64-bit enclosure contains 8", 1, [] {
    const auto a = scl::alpha(0, 64);
    const bool ok = a.exact && *a.exact == 8 && a.enclosure.contains(Rational(8)) && a.enclosure.width_at_most(64);
    return Outcome{ok, "[" + a.enclosure.lo().str() + ", " + a.enclosure.hi().str() + "]"};
  });

  criterion(2, "alpha_n strictly decreasing, alpha_30 < 0.001", 5, [] {
    bool ok = true;
    auto prev = scl::alpha(0, 64);
    for (long n = 1; n <= 30; ++n) {
      const auto a = scl::alpha(n, 64);
      ok = ok && a.enclosure.hi() < prev.enclosure.lo();
      prev = a;
    }
    // independent reference for the bound
    const bool oracle_ok = oracle::encloses(prev.enclosure, alpha_oracle(scl::alpha_cosine(30)));
    const bool small = prev.enclosure.hi().to_rational() < Rational(1, 1000);
    char buf[64];
    std::snprintf(buf, sizeof buf, "alpha_30 ~ %.6g", prev.enclosure.midpoint_double());
    return Outcome{ok && small && oracle_ok, buf};
  });

  criterion(3, "Niven filter: fires only at n = 0", 1, [] {
    bool ok = fields::niven_filter(scl::alpha_cosine(0));
    for (long n = 1; n <= 30; ++n) ok = ok && !fields::niven_filter(scl::alpha_cosine(n));
    return Outcome{ok, ""};
  });

  criterion(4, "det g_n = 1 and tr g_n / 2 = 1 - 2^(-n-1), n = 1..64", 1, [] {
    bool ok = true;
    for (long n = 1; n <= 64; ++n) {
      const auto g = scl::g_matrix(n);
      ok = ok && g.determinant() == 1 && g.trace() / 2 == Rational(1) - Rational::pow2(-n - 1);
    }
    return Outcome{ok, ""};
  });

  criterion(5, "48 scl(g_n) meets alpha_n at 64 bits, n = 1..30", 5, [] {
    bool ok = true;
    for (long n = 1; n <= 30; ++n) {
      ok = ok && scl::scl_lift(scl::g_matrix(n), 64).scaled(48).intersects(scl::alpha(n, 64).enclosure);
    }
    return Outcome{ok, ""};
  });

  criterion(6, "Mersenne numbers of distinct primes <= 31 are coprime", 1, [] {
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    bool ok = true;
    int pairs = 0;
    for (long p : primes)
      for (long q : primes)
        if (p < q) {
          ok = ok && fields::mersenne_gcd(p, q) == 1;
          ++pairs;
        }
    const bool control = fields::mersenne_gcd(4, 6) == 3;
    return Outcome{ok && control, std::to_string(pairs) + " pairs, control gcd(15, 63) = 3"};
  });

  criterion(7, "q2 != 0 and binomial expansion = iterated product", 10, [] {
    bool ok = true;
    for (long p : {3L, 5L, 7L, 11L, 13L})
      for (long n = 1; n <= 20; ++n) ok = ok && fields::power_expansion_check(p, n).q2_nonzero;
    return Outcome{ok, "100 (p, n) pairs"};
  });

  criterion(8, "no exact relation for {3,5,7} at bound 3; gamma_2^6 = 1", 60, [] {
    const auto none = fields::relation_search_exact({3, 5, 7}, 3);
    const auto two = fields::relation_search_exact({2}, 6);
    bool six = false;
    for (const auto& r : two) six = six || r == fields::Relation{6};
    return Outcome{none.empty() && six, std::to_string(two.size()) + " control relations"};
  });

  criterion(9, "256-bit numeric search: NoRelationFound with positive margin", 60, [] {
    const auto v = fields::relation_search_numeric({3, 5, 7}, 10, 256);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s, margin %.3g, %llu combinations", fields::to_string(v.kind),
                  v.margin.to_double(), static_cast<unsigned long long>(v.combinations));
    return Outcome{v.kind == fields::NumericVerdictKind::NoRelationFound && v.margin.sign() > 0, buf};
  });

  criterion(10, "Specker evens within 2^-20; halting set sound and monotone", 10, [] {
    auto evens = reals::specker(urm::named_set("evens"));
    for (int k = 0; k <= 24; ++k) {
      evens.lower.step();
      evens.complement_upper.step();
    }
    const Rational eps = Rational::pow2(-20);
    const Rational lo = *evens.lower.best();
    const Rational up = *evens.complement_upper.best();
    bool ok = lo <= Rational(4, 3) && Rational(4, 3) - lo <= eps && up >= Rational(2, 3) && up - Rational(2, 3) <= eps;

    auto halting = reals::specker(urm::ReSetEnumerator::halting_set());
    Rational prev(0);
    for (int k = 0; k < 5000; ++k) {
      if (auto q = halting.lower.step()) {
        ok = ok && *q >= prev;
        prev = *q;
      }
    }
    const std::uint64_t budget = 5000;
    auto cursor = urm::ReSetEnumerator::halting_set().cursor();
    std::size_t found = 0;
    for (std::uint64_t t = 0; t < budget; ++t) {
      if (auto n = cursor.step()) {
        ++found;
        ok = ok && std::holds_alternative<urm::Halted>(urm::run(urm::decode(*n), *n, budget));
      }
    }
    return Outcome{ok, std::to_string(found) + " halting indices re-verified"};
  });

  criterion(11, "inf_ratio on m + 1 reaches 1 + 2^-10 within 2^11 emissions", 1, [] {
    auto s = reals::inf_ratio(reals::profile_pairs([](std::uint64_t m) { return m + 1; }));
    while (s.emitted() < (1u << 11)) {
      s.step();
      if (s.best() && *s.best() <= Rational(1) + Rational::pow2(-10)) break;
    }
    const bool ok = s.best() && *s.best() <= Rational(1) + Rational::pow2(-10);
    return Outcome{ok, std::to_string(s.emitted()) + " emissions"};
  });

  criterion(12, "semi_decide certifies triangle (1,1) and boundary of tetrahedron (1,4)", 120, [] {
    const auto tri = l1::load_complex(fixture("triangle.json"));
    const auto d = l1::semi_decide(tri, 1, 1, l1::Budget{2, 0});
    const auto s2 = l1::load_complex(fixture("boundary_tetrahedron.json"));
    const auto e = l1::semi_decide(s2, 1, 4, l1::Budget{0, 0});
    if (d.kind != l1::SemiDecisionKind::Certified || e.kind != l1::SemiDecisionKind::Certified) {
      return Outcome{false, "not certified"};
    }
    bool ok = static_cast<bool>(l1::verify_witness(tri, *d.witness)) && static_cast<bool>(l1::verify_witness(s2, *e.witness));
    l1::Witness flipped = *d.witness;
    flipped.terms[0].coefficient = -flipped.terms[0].coefficient;
    const auto v = l1::verify_witness(tri, flipped);
    ok = ok && !v.ok && v.reason.find("class condition") != std::string::npos;
    return Outcome{ok, std::to_string(d.nodes) + " + " + std::to_string(e.nodes) + " search nodes"};
  });

  criterion(13, "triangle stream running minimum <= 1/2", 300, [] {
    l1::SimvolStream stream(l1::load_complex(fixture("triangle.json")));
    std::uint64_t cells = 0;
    while (cells < 200 && !(stream.best() && *stream.best() <= Rational(1, 2))) {
      stream.step();
      ++cells;
    }
    const bool ok = stream.best() && *stream.best() <= Rational(1, 2);
    bool verified = true;
    const auto tri = l1::load_complex(fixture("triangle.json"));
    for (const auto& w : stream.certificates()) verified = verified && static_cast<bool>(l1::verify_witness(tri, w));
    return Outcome{ok && verified, "best " + stream.best()->str() + " after " + std::to_string(cells) + " steps"};
  });

  criterion(14, "homology: H1(triangle) = Z, H2(tetrahedron boundary) = Z, H1(torus) = Z^2", 5, [] {
    const auto h1 = l1::homology(l1::load_complex(fixture("triangle.json")), 1, l1::Coefficients::Integers);
    const auto h2 = l1::homology(l1::load_complex(fixture("boundary_tetrahedron.json")), 2, l1::Coefficients::Integers);
    const auto ht = l1::homology(l1::load_complex(fixture("torus7.json")), 1, l1::Coefficients::Integers);
    const bool ok = h1.str() == "Z" && h2.str() == "Z" && ht.str() == "Z^2";
    return Outcome{ok, h1.str() + ", " + h2.str() + ", " + ht.str()};
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures;
}
