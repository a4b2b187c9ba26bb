#pragma once

// gamma_p = (2^(p-1) - 1)/2^(p-1) + i s sqrt(m)/2^(p-1) with 2^p - 1 = s^2 m,
// checks on its powers, and exact and numeric searches for multiplicative
// relations among several gamma_p.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "simvol/exact/dyadic.hpp"
#include "simvol/fields/multiquadratic.hpp"

namespace simvol::fields {

// 2^p - 1.
Integer mersenne(long p);

// Basis Q(i, sqrt(m_p) ...) with m_p the squarefree part of 2^p - 1. The
// primes must be distinct; radicand 1 (never happens for p >= 2) is dropped.
BasisPtr mersenne_basis(const std::vector<long>& primes);

// Squarefree part of 2^p - 1.
Integer mersenne_radicand(long p);

// Throws std::invalid_argument unless p is prime; the basis must contain the
// radicand of 2^p - 1 and i.
FieldElement gamma(long p, const BasisPtr& basis);
FieldElement gamma(long p);

Integer mersenne_gcd(long p, long q);
// gcd(2^p - 1, 2^q - 1) == 1. Requires p != q, both >= 1.
bool mersenne_coprime(long p, long q);

struct PowerExpansion {
  Rational q1;  // coefficient on 1
  Rational q2;  // coefficient on i*sqrt(m)
  bool q2_nonzero;
  FieldElement power;
};

class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// gamma_p^n by n successive multiplications and by the binomial sum; throws
// InternalConsistencyError when they differ.
PowerExpansion power_expansion_check(long p, long n);

// True iff every coefficient on a basis element containing sqrt(radicand) is
// zero. std::invalid_argument if the radicand is not in the basis.
bool subfield_membership(const FieldElement& x, const Integer& excluded_radicand);

using Relation = std::vector<long>;

inline constexpr std::uint64_t kRelationSearchLimit = 10'000'000;

// All (n_1..n_k) in [-bound, bound]^k, not all zero, with prod gamma^n = 1,
// in lexicographic order. std::invalid_argument past the search guard.
std::vector<Relation> relation_search_exact(const std::vector<long>& primes, long bound, unsigned threads = 1);

struct SubfieldCheck {
  std::uint64_t tuples_checked = 0;
  std::vector<Relation> violations;  // tuples where gamma_{p_k}^{n_k} fell into the subfield
};

// For each tuple with n_k > 0, gamma_{p_k}^{n_k} must lie outside the field
// generated without sqrt(m_{p_k}).
SubfieldCheck subfield_exclusion_check(const std::vector<long>& primes, long bound);

enum class NumericVerdictKind { NoRelationFound, RelationConfirmed, NeedMoreBits };

struct NumericCandidate {
  // coeffs[0] multiplies pi, coeffs[j] multiplies arccos(1 - 2^(1-p_j)).
  std::vector<long> coeffs;
  bool confirmed;
};

struct NumericVerdict {
  NumericVerdictKind kind;
  long bits;
  // Certified lower bound on |sum| over all scanned non-candidate tuples.
  exact::Dyadic margin;
  std::uint64_t combinations = 0;
  std::vector<NumericCandidate> candidates;
};

// Exhaustive scan over integer combinations n_0 pi + sum n_j theta_j with
// |n| <= coeff_bound (first nonzero coefficient positive). Candidates whose
// enclosure contains 0 are re-checked exactly as prod gamma^(n_j) = (-1)^n_0.
// bits >= 128.
NumericVerdict relation_search_numeric(const std::vector<long>& primes, long coeff_bound, long bits);

// Doubles the precision until the verdict is not NeedMoreBits or max_bits is
// exceeded.
NumericVerdict relation_search_numeric_adaptive(const std::vector<long>& primes, long coeff_bound, long bits,
                                                long max_bits = 4096);

// c in {0, +-1/2, +-1}; std::domain_error for |c| > 1.
bool niven_filter(const Rational& c);

const char* to_string(NumericVerdictKind kind);

}  // namespace simvol::fields
