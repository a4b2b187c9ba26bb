#pragma once

// One-sided computable reals as bound streams.
//
// An UpperBoundStream produces rationals q0, q1, ... whose infimum is the
// represented real; a LowerBoundStream is the mirror image with a supremum.
// A stream advances in steps. Each step does a bounded amount of work and may
// or may not emit a bound, so a combinator that is waiting on its operands can
// defer without blocking.
//
// Streams are single-consumer. Combinators take ownership of their operands.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simvol/exact/rational.hpp"

namespace simvol::reals {

using exact::Rational;

// Raised when a producer breaks its contract, e.g. a negative bound fed into
// mul_nonneg.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BoundSource {
 public:
  virtual ~BoundSource() = default;
  virtual std::optional<Rational> step() = 0;
};

enum class BoundKind { Upper, Lower };

template <BoundKind Kind>
class BoundStream {
 public:
  explicit BoundStream(std::unique_ptr<BoundSource> source, std::optional<Rational> exact = std::nullopt)
      : source_(std::move(source)), exact_(std::move(exact)) {}

  static BoundStream from_function(std::function<std::optional<Rational>()> fn,
                                   std::optional<Rational> exact = std::nullopt);
  static BoundStream constant(const Rational& value) {
    return from_function([value] { return std::optional<Rational>(value); }, value);
  }

  // One unit of work. Returns the emitted bound, if any.
  std::optional<Rational> step() {
    ++steps_;
    auto q = source_->step();
    if (q) {
      ++emitted_;
      if (!best_ || (Kind == BoundKind::Upper ? *q < *best_ : *q > *best_)) {
        best_ = *q;
      }
    }
    return q;
  }

  // Steps until a bound is emitted or max_steps is spent.
  std::optional<Rational> next(std::uint64_t max_steps = 1'000'000) {
    for (std::uint64_t i = 0; i < max_steps; ++i) {
      if (auto q = step()) {
        return q;
      }
    }
    return std::nullopt;
  }

  // Running minimum (upper) or maximum (lower) of everything emitted so far.
  const std::optional<Rational>& best() const { return best_; }
  std::uint64_t emitted() const { return emitted_; }
  std::uint64_t steps() const { return steps_; }
  // Known exact value, for fixtures.
  const std::optional<Rational>& exact_value() const { return exact_; }

 private:
  std::unique_ptr<BoundSource> source_;
  std::optional<Rational> exact_;
  std::optional<Rational> best_;
  std::uint64_t emitted_ = 0;
  std::uint64_t steps_ = 0;
};

using UpperBoundStream = BoundStream<BoundKind::Upper>;
using LowerBoundStream = BoundStream<BoundKind::Lower>;

namespace detail {
class FunctionSource final : public BoundSource {
 public:
  explicit FunctionSource(std::function<std::optional<Rational>()> fn) : fn_(std::move(fn)) {}
  std::optional<Rational> step() override { return fn_(); }

 private:
  std::function<std::optional<Rational>()> fn_;
};
}  // namespace detail

template <BoundKind Kind>
BoundStream<Kind> BoundStream<Kind>::from_function(std::function<std::optional<Rational>()> fn,
                                                   std::optional<Rational> exact) {
  return BoundStream(std::make_unique<detail::FunctionSource>(std::move(fn)), std::move(exact));
}

// Two-sided computable real: sup lower = inf upper.
struct ComputableReal {
  UpperBoundStream upper;
  LowerBoundStream lower;

  static ComputableReal exact(const Rational& value) {
    return {UpperBoundStream::constant(value), LowerBoundStream::constant(value)};
  }
};

}  // namespace simvol::reals
