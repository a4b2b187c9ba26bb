#include "simvol/fields/relations.hpp"

#include <algorithm>
#include <thread>

#include "simvol/exact/enclosures.hpp"

namespace simvol::fields {

namespace {

void require_prime(long p) {
  if (!is_prime_small(p)) {
    throw std::invalid_argument("gamma_p needs a prime p, got " + std::to_string(p));
  }
}

std::uint64_t checked_count(std::size_t k, long bound, std::uint64_t limit, const char* what) {
  if (bound < 0) {
    throw std::invalid_argument(std::string(what) + ": bound must be >= 0");
  }
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(bound) + 1;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (total > limit / side) {
      throw std::invalid_argument(std::string(what) + ": search space exceeds the guard of " +
                                  std::to_string(limit));
    }
    total *= side;
  }
  return total;
}

// pow_table[j][e + bound] = gamma_{p_j}^e.
std::vector<std::vector<FieldElement>> power_table(const std::vector<long>& primes, const BasisPtr& basis,
                                                   long bound) {
  std::vector<std::vector<FieldElement>> table;
  for (long p : primes) {
    const FieldElement g = gamma(p, basis);
    const FieldElement g_inv = g.inverse();
    std::vector<FieldElement> row(2 * bound + 1, FieldElement::rational(basis, 1));
    for (long e = 1; e <= bound; ++e) {
      row[bound + e] = row[bound + e - 1] * g;
      row[bound - e] = row[bound - e + 1] * g_inv;
    }
    table.push_back(std::move(row));
  }
  return table;
}

void search_from(const std::vector<std::vector<FieldElement>>& table, long bound, const FieldElement& one,
                 std::size_t depth, const FieldElement& prefix, Relation& current, bool nonzero,
                 std::vector<Relation>& out) {
  if (depth == table.size()) {
    if (nonzero && prefix == one) {
      out.push_back(current);
    }
    return;
  }
  for (long e = -bound; e <= bound; ++e) {
    current[depth] = e;
    search_from(table, bound, one, depth + 1, prefix * table[depth][bound + e], current, nonzero || e != 0, out);
  }
}

}  // namespace

Integer mersenne(long p) {
  if (p < 1) {
    throw std::invalid_argument("Mersenne exponent must be >= 1");
  }
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(p));
  return m - 1;
}

Integer mersenne_radicand(long p) { return squarefree_split(mersenne(p)).squarefree; }

BasisPtr mersenne_basis(const std::vector<long>& primes) {
  std::vector<Integer> radicands;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    require_prime(primes[j]);
    for (std::size_t l = 0; l < j; ++l) {
      if (primes[l] == primes[j]) {
        throw std::invalid_argument("duplicate prime " + std::to_string(primes[j]));
      }
    }
    Integer m = mersenne_radicand(primes[j]);
    if (m != 1) {
      radicands.push_back(std::move(m));
    }
  }
  return make_basis(std::move(radicands), true);
}

FieldElement gamma(long p, const BasisPtr& basis) {
  require_prime(p);
  if (!basis->include_i()) {
    throw std::invalid_argument("gamma_p needs a basis containing i");
  }
  const SquarefreeSplit split = squarefree_split(mersenne(p));
  const Rational denom = Rational::pow2(p - 1);
  FieldElement g = FieldElement::rational(basis, (denom - Rational(1)) / denom);
  const Rational im = Rational(split.square_root) / denom;
  if (split.squarefree == 1) {
    return g + FieldElement::imaginary_unit(basis).scaled(im);
  }
  const auto j = basis->index_of(split.squarefree);
  if (!j) {
    throw std::invalid_argument("basis lacks sqrt(" + split.squarefree.get_str() + ")");
  }
  return g + FieldElement::basis_element(basis, basis->i_mask() | basis->radical_mask(*j), im);
}

FieldElement gamma(long p) { return gamma(p, mersenne_basis({p})); }

Integer mersenne_gcd(long p, long q) {
  Integer g;
  const Integer a = mersenne(p);
  const Integer b = mersenne(q);
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool mersenne_coprime(long p, long q) {
  if (p == q) {
    throw std::invalid_argument("mersenne_coprime needs distinct exponents");
  }
  return mersenne_gcd(p, q) == 1;
}

PowerExpansion power_expansion_check(long p, long n) {
  if (n < 1) {
    throw std::invalid_argument("power_expansion_check needs n >= 1");
  }
  const BasisPtr basis = mersenne_basis({p});
  const FieldElement g = gamma(p, basis);
  FieldElement iterated = g;
  for (long k = 1; k < n; ++k) {
    iterated = iterated * g;
  }

  // (a + i s sqrt(m))^n / 2^(n(p-1)), expanded term by term.
  const SquarefreeSplit split = squarefree_split(mersenne(p));
  Integer a;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
  a -= 1;
  const std::size_t radical = split.squarefree == 1 ? 0 : basis->radical_mask(0);
  const std::size_t odd_mask = basis->i_mask() | radical;
  FieldElement closed = FieldElement::zero(basis);
  Integer binom = 1;
  for (long j = 0; j <= n; ++j) {
    Integer apow, spow, mpow;
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n - j));
    mpz_pow_ui(spow.get_mpz_t(), split.square_root.get_mpz_t(), static_cast<unsigned long>(j));
    mpz_pow_ui(mpow.get_mpz_t(), split.squarefree.get_mpz_t(), static_cast<unsigned long>(j / 2));
    Integer term = binom * apow * spow * mpow;
    if (j % 4 >= 2) term = -term;  // i^j
    closed = closed + FieldElement::basis_element(basis, j % 2 == 0 ? 0 : odd_mask, Rational(term));
    binom = binom * (n - j) / (j + 1);
  }
  closed = closed.scaled(Rational::pow2(-n * (p - 1)));

  for (std::size_t s = 0; s < basis->dimension(); ++s) {
    if (closed.coeff(s) != iterated.coeff(s)) {
      throw InternalConsistencyError("gamma_" + std::to_string(p) + "^" + std::to_string(n) +
                                     ": binomial expansion disagrees with iterated product on " +
                                     basis->label(s));
    }
  }
  PowerExpansion out{iterated.coeff(0), iterated.coeff(odd_mask), false, iterated};
  out.q2_nonzero = !out.q2.is_zero();
  return out;
}

bool subfield_membership(const FieldElement& x, const Integer& excluded_radicand) {
  const auto j = x.basis()->index_of(excluded_radicand);
  if (!j) {
    throw std::invalid_argument("radicand " + excluded_radicand.get_str() + " not in basis");
  }
  const std::size_t bit = x.basis()->radical_mask(*j);
  for (std::size_t s = 0; s < x.basis()->dimension(); ++s) {
    if ((s & bit) && !x.coeff(s).is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<Relation> relation_search_exact(const std::vector<long>& primes, long bound, unsigned threads) {
  if (primes.empty()) {
    return {};
  }
  const std::uint64_t k = primes.size();
  const std::uint64_t tuples = checked_count(primes.size(), bound, kRelationSearchLimit, "relation_search_exact");
  if (tuples > kRelationSearchLimit / k) {
    throw std::invalid_argument("relation_search_exact: search space exceeds the guard of " +
                                std::to_string(kRelationSearchLimit));
  }
  const BasisPtr basis = mersenne_basis(primes);
  const auto table = power_table(primes, basis, bound);
  const FieldElement one = FieldElement::rational(basis, 1);

  // The first exponent is split round-robin across workers; each worker's
  // output is lexicographic, so concatenating by first exponent restores the
  // global order.
  const long side = 2 * bound + 1;
  std::vector<std::vector<Relation>> by_first(static_cast<std::size_t>(side));
  auto work = [&](unsigned worker, unsigned stride) {
    for (long idx = worker; idx < side; idx += stride) {
      Relation current(primes.size(), 0);
      current[0] = idx - bound;
      search_from(table, bound, one, 1, table[0][idx], current, current[0] != 0, by_first[idx]);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(side)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& t : pool) t.join();
  }
  std::vector<Relation> out;
  for (auto& chunk : by_first) {
    out.insert(out.end(), chunk.begin(), chunk.end());
  }
  return out;
}

SubfieldCheck subfield_exclusion_check(const std::vector<long>& primes, long bound) {
  SubfieldCheck out;
  if (primes.empty()) {
    return out;
  }
  const std::uint64_t tuples = checked_count(primes.size(), bound, kRelationSearchLimit, "subfield_exclusion_check");
  const BasisPtr basis = mersenne_basis(primes);
  const Integer excluded = mersenne_radicand(primes.back());
  const FieldElement g = gamma(primes.back(), basis);
  // Tuples sharing n_k share the element under test.
  const std::uint64_t per_last = tuples / (2 * static_cast<std::uint64_t>(bound) + 1);
  FieldElement power = FieldElement::rational(basis, 1);
  for (long e = 1; e <= bound; ++e) {
    power = power * g;
    out.tuples_checked += per_last;
    if (subfield_membership(power, excluded)) {
      Relation r(primes.size(), 0);
      r.back() = e;
      out.violations.push_back(std::move(r));
    }
  }
  return out;
}

NumericVerdict relation_search_numeric(const std::vector<long>& primes, long coeff_bound, long bits) {
  if (bits < 128) {
    throw std::invalid_argument("relation_search_numeric needs at least 128 bits");
  }
  const std::size_t dims = primes.size() + 1;
  checked_count(dims, coeff_bound, kRelationSearchLimit, "relation_search_numeric");
  for (long p : primes) require_prime(p);

  // Vector 0 is pi, vector j is theta_j = arccos(1 - 2^(1-p_j)), all at the
  // same fixed-point precision.
  std::vector<exact::detail::FixedInterval> v;
  v.push_back(exact::detail::pi_fixed(bits));
  for (long p : primes) {
    v.push_back(exact::detail::arccos_fixed(Rational(1) - Rational::pow2(1 - p), bits));
    if (v.back().precision != bits) {
      throw std::logic_error("fixed-point precision mismatch");
    }
  }

  NumericVerdict out{NumericVerdictKind::NoRelationFound, bits, exact::Dyadic(0), 0, {}};
  std::optional<Integer> margin;
  std::vector<long> c(dims, -coeff_bound);
  const auto advance = [&]() {
    for (std::size_t j = dims; j-- > 0;) {
      if (c[j] < coeff_bound) {
        ++c[j];
        return true;
      }
      c[j] = -coeff_bound;
    }
    return false;
  };
  std::vector<std::vector<long>> raw_candidates;
  do {
    const auto first = std::find_if(c.begin(), c.end(), [](long x) { return x != 0; });
    if (first == c.end() || *first < 0) continue;
    ++out.combinations;
    Integer lo = 0;
    Integer hi = 0;
    for (std::size_t j = 0; j < dims; ++j) {
      if (c[j] >= 0) {
        lo += c[j] * v[j].lo;
        hi += c[j] * v[j].hi;
      } else {
        lo += c[j] * v[j].hi;
        hi += c[j] * v[j].lo;
      }
    }
    if (lo <= 0 && hi >= 0) {
      raw_candidates.push_back(c);
      continue;
    }
    Integer gap = lo > 0 ? lo : Integer(-hi);
    if (!margin || gap < *margin) margin = gap;
  } while (advance());

  if (margin) out.margin = exact::Dyadic(*margin, -bits);
  if (raw_candidates.empty()) return out;

  const BasisPtr basis = mersenne_basis(primes);
  std::vector<FieldElement> gammas;
  for (long p : primes) gammas.push_back(gamma(p, basis));
  bool all_confirmed = true;
  for (auto& cand : raw_candidates) {
    FieldElement prod = FieldElement::rational(basis, cand[0] % 2 == 0 ? 1 : -1);
    for (std::size_t j = 0; j < primes.size(); ++j) {
      prod = prod * gammas[j].pow(-cand[j + 1]);
    }
    const bool confirmed = prod == FieldElement::rational(basis, 1);
    all_confirmed = all_confirmed && confirmed;
    out.candidates.push_back({std::move(cand), confirmed});
  }
  out.kind = all_confirmed ? NumericVerdictKind::RelationConfirmed : NumericVerdictKind::NeedMoreBits;
  return out;
}

NumericVerdict relation_search_numeric_adaptive(const std::vector<long>& primes, long coeff_bound, long bits,
                                                long max_bits) {
  NumericVerdict v = relation_search_numeric(primes, coeff_bound, bits);
  while (v.kind == NumericVerdictKind::NeedMoreBits && bits * 2 <= max_bits) {
    bits *= 2;
    v = relation_search_numeric(primes, coeff_bound, bits);
  }
  return v;
}

bool niven_filter(const Rational& c) {
  if (c.abs() > Rational(1)) {
    throw std::domain_error("niven_filter needs -1 <= c <= 1, got " + c.str());
  }
  const Rational half(1, 2);
  return c.is_zero() || c.abs() == half || c.abs() == Rational(1);
}

const char* to_string(NumericVerdictKind kind) {
  switch (kind) {
    case NumericVerdictKind::NoRelationFound:
      return "NoRelationFound";
    case NumericVerdictKind::RelationConfirmed:
      return "RelationConfirmed";
    case NumericVerdictKind::NeedMoreBits:
      return "NeedMoreBits";
  }
  return "unknown";
}

}  // namespace simvol::fields
