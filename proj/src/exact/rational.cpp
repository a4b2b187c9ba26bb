#include "simvol/exact/rational.hpp"

#include <stdexcept>

namespace simvol::exact {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    if (part.empty()) {
      throw std::invalid_argument("empty integer in rational literal");
    }
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) {
      throw std::invalid_argument("bad rational literal: " + part);
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("bad rational literal: " + part);
      }
    }
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) {
    return Rational(parse_int(s));
  }
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational Rational::pow2(long exponent) {
  Integer p;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational Rational::abs() const {
  Rational r = *this;
  mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) {
      throw std::domain_error("negative power of zero");
    }
    return Rational(1) / pow(-exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      if (b.is_zero()) {
        return std::nullopt;
      }
      return a / b;
  }
  return std::nullopt;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

}  // namespace simvol::exact
