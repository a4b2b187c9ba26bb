#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "simvol/reals/stream.hpp"
#include "simvol/urm/enumerator.hpp"

namespace simvol::reals {

// Product of two non-negative right-computable reals. The operands are
// advanced alternately; after every step the product of their running minima
// is emitted. A negative operand bound throws ContractViolation.
UpperBoundStream mul_nonneg(UpperBoundStream a, UpperBoundStream b);

// Upper bounds of alpha from upper bounds of c*alpha and a computable c > 0.
// A non-negative bound u of c*alpha is divided by a positive lower bound of c;
// a negative u is divided by an upper bound of c. Until c's lower stream turns
// positive the stream defers.
UpperBoundStream unscale(UpperBoundStream scaled, ComputableReal c);

// x_A = sum_{n in A} 2^-n. The lower stream approximates x_A from below, the
// upper stream approximates 2 - x_A = x_{N \ A} from above. Each step visits
// one schedule cell of the enumerator.
struct SpeckerStreams {
  LowerBoundStream lower;
  UpperBoundStream complement_upper;
};
SpeckerStreams specker(const urm::ReSetEnumerator& set);

// Two-sided x_A for a recursive set: after deciding n < t the value lies in
// [s_t, s_t + 2^(1-t)]. Throws std::invalid_argument for non-recursive kinds.
ComputableReal specker_computable(const urm::ReSetEnumerator& set);

// A deterministic enumerator of pairs (m, n); std::nullopt means "nothing this
// step".
using PairSource = std::function<std::optional<std::pair<std::uint64_t, std::uint64_t>>()>;

// Emits n/m for each enumerated pair. Pairs with m = 0 are skipped and
// reported through `warn`.
UpperBoundStream inf_ratio(PairSource pairs,
                           std::function<void(const std::string&)> warn = nullptr);

// Enumerates S = {(m, n) | m >= 1, n >= f(m)} for a total f. Even steps emit
// (i+1, f(i+1)); odd steps walk the Cantor diagonal over (m-1, j) emitting
// (m, f(m) + j + 1). Every element of S appears exactly once.
PairSource profile_pairs(std::function<std::uint64_t(std::uint64_t)> f);

enum class SemiResult { ConfirmedBelow, Unknown };

// Advances `stream` up to `budget` steps; ConfirmedBelow iff a bound < x was
// emitted (including before this call). Unknown makes no claim.
SemiResult semi_lt(UpperBoundStream& stream, const Rational& x, std::uint64_t budget);

// Enumerates the upper cut {x in Q | alpha < x}: step t = pair(k, j) emits
// q_k + r_j where r_j is the j-th positive rational in Calkin-Wilf order.
class CutEnumerator {
 public:
  explicit CutEnumerator(UpperBoundStream stream) : stream_(std::move(stream)) {}
  std::optional<Rational> step();

 private:
  UpperBoundStream stream_;
  std::vector<Rational> bounds_;
  std::uint64_t t_ = 0;
};

// j-th positive rational (j >= 0) of the Calkin-Wilf sequence 1, 1/2, 2, 1/3, ...
Rational calkin_wilf(std::uint64_t j);

}  // namespace simvol::reals
