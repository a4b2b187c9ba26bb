#include "simvol/reals/operations.hpp"

#include <iostream>

namespace simvol::reals {

namespace {

class ProductSource final : public BoundSource {
 public:
  ProductSource(UpperBoundStream a, UpperBoundStream b) : a_(std::move(a)), b_(std::move(b)) {}

  std::optional<Rational> step() override {
    UpperBoundStream& s = turn_ ? b_ : a_;
    turn_ = !turn_;
    if (auto q = s.step(); q && q->sign() < 0) {
      throw ContractViolation("mul_nonneg operand emitted a negative bound " + q->str());
    }
    if (a_.best() && b_.best()) {
      return *a_.best() * *b_.best();
    }
    return std::nullopt;
  }

 private:
  UpperBoundStream a_;
  UpperBoundStream b_;
  bool turn_ = false;
};

class UnscaleSource final : public BoundSource {
 public:
  UnscaleSource(UpperBoundStream scaled, ComputableReal c) : scaled_(std::move(scaled)), c_(std::move(c)) {}

  std::optional<Rational> step() override {
    switch (turn_) {
      case 0:
        scaled_.step();
        break;
      case 1:
        c_.lower.step();
        break;
      default:
        c_.upper.step();
        break;
    }
    turn_ = (turn_ + 1) % 3;
    if (!scaled_.best()) {
      return std::nullopt;
    }
    const Rational& u = *scaled_.best();
    if (u.sign() >= 0) {
      if (c_.lower.best() && c_.lower.best()->sign() > 0) {
        return u / *c_.lower.best();
      }
      return std::nullopt;
    }
    if (c_.upper.best() && c_.upper.best()->sign() > 0) {
      return u / *c_.upper.best();
    }
    return std::nullopt;
  }

 private:
  UpperBoundStream scaled_;
  ComputableReal c_;
  int turn_ = 0;
};

class SpeckerSource final : public BoundSource {
 public:
  SpeckerSource(const urm::ReSetEnumerator& set, bool complement)
      : cursor_(set.cursor()), complement_(complement) {}

  std::optional<Rational> step() override {
    if (auto n = cursor_.step()) {
      sum_ += Rational::pow2(-static_cast<long>(*n));
    }
    return complement_ ? Rational(2) - sum_ : sum_;
  }

 private:
  urm::ReSetEnumerator::Cursor cursor_;
  bool complement_;
  Rational sum_{0};
};

class RecursiveSpeckerSource final : public BoundSource {
 public:
  RecursiveSpeckerSource(const urm::ReSetEnumerator& set, bool upper) : set_(set), upper_(upper) {}

  std::optional<Rational> step() override {
    if (set_.visit(decided_)) {
      sum_ += Rational::pow2(-static_cast<long>(decided_));
    }
    ++decided_;
    if (upper_) {
      return sum_ + Rational::pow2(1 - static_cast<long>(decided_));
    }
    return sum_;
  }

 private:
  urm::ReSetEnumerator set_;
  bool upper_;
  std::uint64_t decided_ = 0;
  Rational sum_{0};
};

class RatioSource final : public BoundSource {
 public:
  RatioSource(PairSource pairs, std::function<void(const std::string&)> warn)
      : pairs_(std::move(pairs)), warn_(std::move(warn)) {}

  std::optional<Rational> step() override {
    const auto p = pairs_();
    if (!p) {
      return std::nullopt;
    }
    if (p->first == 0) {
      if (warn_) {
        warn_("inf_ratio: skipping pair with m = 0 (n = " + std::to_string(p->second) + ")");
      }
      return std::nullopt;
    }
    return Rational(exact::Integer(static_cast<unsigned long>(p->second)),
                    exact::Integer(static_cast<unsigned long>(p->first)));
  }

 private:
  PairSource pairs_;
  std::function<void(const std::string&)> warn_;
};

}  // namespace

UpperBoundStream mul_nonneg(UpperBoundStream a, UpperBoundStream b) {
  std::optional<Rational> exact;
  if (a.exact_value() && b.exact_value()) {
    exact = *a.exact_value() * *b.exact_value();
  }
  return UpperBoundStream(std::make_unique<ProductSource>(std::move(a), std::move(b)), exact);
}

UpperBoundStream unscale(UpperBoundStream scaled, ComputableReal c) {
  std::optional<Rational> exact;
  if (scaled.exact_value() && c.upper.exact_value() && c.upper.exact_value()->sign() > 0) {
    exact = *scaled.exact_value() / *c.upper.exact_value();
  }
  return UpperBoundStream(std::make_unique<UnscaleSource>(std::move(scaled), std::move(c)), exact);
}

SpeckerStreams specker(const urm::ReSetEnumerator& set) {
  return {LowerBoundStream(std::make_unique<SpeckerSource>(set, false)),
          UpperBoundStream(std::make_unique<SpeckerSource>(set, true))};
}

ComputableReal specker_computable(const urm::ReSetEnumerator& set) {
  if (set.kind() != urm::ReSetEnumerator::Kind::Recursive) {
    throw std::invalid_argument("specker_computable needs a recursive set");
  }
  return {UpperBoundStream(std::make_unique<RecursiveSpeckerSource>(set, true)),
          LowerBoundStream(std::make_unique<RecursiveSpeckerSource>(set, false))};
}

UpperBoundStream inf_ratio(PairSource pairs, std::function<void(const std::string&)> warn) {
  if (!warn) {
    warn = [](const std::string& msg) { std::clog << "warning: " << msg << '\n'; };
  }
  return UpperBoundStream(std::make_unique<RatioSource>(std::move(pairs), std::move(warn)));
}

PairSource profile_pairs(std::function<std::uint64_t(std::uint64_t)> f) {
  struct State {
    std::uint64_t t = 0;
    std::uint64_t next_minimal = 1;
    std::uint64_t diagonal = 0;
  };
  auto state = std::make_shared<State>();
  return [state, f = std::move(f)]() -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    const bool even = state->t++ % 2 == 0;
    if (even) {
      const std::uint64_t m = state->next_minimal++;
      return std::pair{m, f(m)};
    }
    const auto [mm, j] = urm::cantor_unpair(state->diagonal++);
    const std::uint64_t m = mm + 1;
    return std::pair{m, f(m) + j + 1};
  };
}

SemiResult semi_lt(UpperBoundStream& stream, const Rational& x, std::uint64_t budget) {
  for (std::uint64_t i = 0; i < budget; ++i) {
    if (stream.best() && *stream.best() < x) {
      break;
    }
    stream.step();
  }
  return stream.best() && *stream.best() < x ? SemiResult::ConfirmedBelow : SemiResult::Unknown;
}

Rational calkin_wilf(std::uint64_t j) {
  // Stern's diatomic sequence: the j-th term is fusc(j+1)/fusc(j+2).
  auto fusc = [](std::uint64_t n) {
    std::uint64_t a = 1;
    std::uint64_t b = 0;
    while (n > 0) {
      if (n % 2 == 0) {
        a += b;
      } else {
        b += a;
      }
      n /= 2;
    }
    return b;
  };
  return Rational(exact::Integer(static_cast<unsigned long>(fusc(j + 1))),
                  exact::Integer(static_cast<unsigned long>(fusc(j + 2))));
}

std::optional<Rational> CutEnumerator::step() {
  const auto [k, j] = urm::cantor_unpair(t_);
  if (k >= bounds_.size()) {
    if (auto q = stream_.step()) {
      bounds_.push_back(*q);
    }
    if (k >= bounds_.size()) {
      return std::nullopt;
    }
  }
  ++t_;
  return bounds_[k] + calkin_wilf(j);
}

}  // namespace simvol::reals
