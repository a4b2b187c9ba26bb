#include "simvol/fields/multiquadratic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simvol/exact/enclosures.hpp"

namespace simvol::fields {

namespace {

void require_same_basis(const FieldElement& a, const FieldElement& b) {
  if (a.basis() != b.basis() && !(*a.basis() == *b.basis())) {
    throw std::invalid_argument("field elements live over different radical bases");
  }
}

}  // namespace

RadicalBasis::RadicalBasis(std::vector<Integer> radicands, bool include_i)
    : radicands_(std::move(radicands)), include_i_(include_i) {
  std::sort(radicands_.begin(), radicands_.end());
  for (std::size_t j = 0; j < radicands_.size(); ++j) {
    const Integer& m = radicands_[j];
    if (m < 2) {
      throw std::invalid_argument("radicand " + m.get_str() + " must be >= 2");
    }
    if (squarefree_split(m).square_root != 1) {
      throw std::invalid_argument("radicand " + m.get_str() + " is not squarefree");
    }
    for (std::size_t l = 0; l < j; ++l) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), radicands_[l].get_mpz_t());
      if (g != 1) {
        throw std::invalid_argument("radicands " + radicands_[l].get_str() + " and " + m.get_str() +
                                    " are not coprime");
      }
    }
  }
  if (bits() > 20) {
    throw std::invalid_argument("radical basis too large");
  }
  common_product_.assign(dimension(), Integer(1));
  for (std::size_t mask = 0; mask < dimension(); ++mask) {
    for (std::size_t j = 0; j < radicands_.size(); ++j) {
      if (mask & radical_mask(j)) {
        common_product_[mask] *= radicands_[j];
      }
    }
  }
}

std::optional<std::size_t> RadicalBasis::index_of(const Integer& radicand) const {
  const auto it = std::find(radicands_.begin(), radicands_.end(), radicand);
  if (it == radicands_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - radicands_.begin());
}

std::string RadicalBasis::label(std::size_t mask) const {
  if (mask == 0) {
    return "1";
  }
  std::string out;
  if (include_i_ && (mask & 1)) {
    out = "i";
  }
  for (std::size_t j = 0; j < radicands_.size(); ++j) {
    if (mask & radical_mask(j)) {
      out += (out.empty() ? "" : "*") + std::string("sqrt(") + radicands_[j].get_str() + ")";
    }
  }
  return out;
}

BasisPtr make_basis(std::vector<Integer> radicands, bool include_i) {
  return std::make_shared<const RadicalBasis>(std::move(radicands), include_i);
}

FieldElement::FieldElement(BasisPtr basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->dimension()) {
    throw std::invalid_argument("coefficient vector does not match basis dimension");
  }
}

FieldElement FieldElement::zero(BasisPtr basis) {
  const std::size_t n = basis->dimension();
  return {std::move(basis), std::vector<Rational>(n)};
}

FieldElement FieldElement::rational(BasisPtr basis, const Rational& q) {
  return basis_element(std::move(basis), 0, q);
}

FieldElement FieldElement::imaginary_unit(BasisPtr basis) {
  if (!basis->include_i()) {
    throw std::invalid_argument("basis does not contain i");
  }
  return basis_element(std::move(basis), 1);
}

FieldElement FieldElement::sqrt_of(BasisPtr basis, const Integer& radicand) {
  const auto j = basis->index_of(radicand);
  if (!j) {
    throw std::invalid_argument("radicand " + radicand.get_str() + " not in basis");
  }
  const std::size_t mask = basis->radical_mask(*j);
  return basis_element(std::move(basis), mask);
}

FieldElement FieldElement::basis_element(BasisPtr basis, std::size_t mask, const Rational& coeff) {
  FieldElement x = zero(std::move(basis));
  x.coeffs_.at(mask) = coeff;
  return x;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_basis(a, b);
  FieldElement out = a;
  for (std::size_t s = 0; s < out.coeffs_.size(); ++s) {
    out.coeffs_[s] += b.coeffs_[s];
  }
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement FieldElement::operator-() const { return scaled(-1); }

FieldElement FieldElement::scaled(const Rational& q) const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) {
    c *= q;
  }
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_basis(a, b);
  const RadicalBasis& basis = *a.basis_;
  FieldElement out = FieldElement::zero(a.basis_);
  const std::size_t n = basis.dimension();
  const std::size_t imask = basis.i_mask();
  for (std::size_t s = 0; s < n; ++s) {
    if (a.coeffs_[s].is_zero()) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (b.coeffs_[t].is_zero()) continue;
      // e_S e_T = (-1)^[i in S and T] * prod_{j in S and T} m_j * e_{S xor T}
      const std::size_t shared = s & t;
      Rational term = a.coeffs_[s] * b.coeffs_[t] * Rational(basis.common_product(shared));
      if (shared & imask) {
        term = -term;
      }
      out.coeffs_[s ^ t] += term;
    }
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  const std::size_t n = basis_->dimension();
  // Column t of the matrix holds the coefficients of (*this) * e_t.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t t = 0; t < n; ++t) {
    const FieldElement col = *this * basis_element(basis_, t);
    for (std::size_t s = 0; s < n; ++s) {
      m[s][t] = col.coeffs_[s];
    }
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) {
      throw std::domain_error("singular multiplication matrix; basis independence violated");
    }
    std::swap(m[c], m[pivot]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t s = 0; s < n; ++s) x[s] = m[s][n];
  return {basis_, std::move(x)};
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  FieldElement result = rational(basis_, 1);
  FieldElement base = *this;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

FieldElement FieldElement::conjugate() const {
  FieldElement out = *this;
  const std::size_t imask = basis_->i_mask();
  if (imask == 0) return out;
  for (std::size_t s = 0; s < out.coeffs_.size(); ++s) {
    if (s & imask) out.coeffs_[s] = -out.coeffs_[s];
  }
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_basis(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[s].str() << ")";
    if (s != 0) os << "*" << basis_->label(s);
  }
  return first ? "0" : os.str();
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add:
      return a + b;
    case FieldOp::Sub:
      return a - b;
    case FieldOp::Mul:
      return a * b;
    case FieldOp::Inverse:
      return a.inverse();
  }
  throw std::invalid_argument("unknown field operation");
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval embed(const FieldElement& x, long bits) {
  using exact::Dyadic;
  using exact::DyadicInterval;
  const RadicalBasis& basis = *x.basis();
  const long precision = bits + 16;
  std::vector<DyadicInterval> roots;
  roots.reserve(basis.radicands().size());
  for (const auto& m : basis.radicands()) {
    roots.push_back(exact::sqrt_enclosure(Rational(m), precision));
  }
  DyadicInterval re(Dyadic(0));
  DyadicInterval im(Dyadic(0));
  for (std::size_t s = 0; s < basis.dimension(); ++s) {
    const Rational& c = x.coeff(s);
    if (c.is_zero()) continue;
    DyadicInterval term = DyadicInterval::around(c, precision);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (s & basis.radical_mask(j)) term = term * roots[j];
    }
    term = term.round_outward(precision);
    if (s & basis.i_mask()) {
      im = im + term;
    } else {
      re = re + term;
    }
  }
  return {re, im};
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n < 1) {
    throw std::invalid_argument("squarefree_split needs a positive integer");
  }
  Integer rest = n;
  Integer root = 1;
  Integer part = 1;
  for (unsigned long p = 2; p <= 1'000'000 && Integer(p) * p <= rest; ++p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) part *= p;
  }
  if (rest > 1) {
    if (Integer(1'000'000) * 1'000'000 < rest) {
      throw std::domain_error("cofactor " + rest.get_str() + " is beyond the trial-division guard");
    }
    part *= rest;  // rest has no factor <= min(10^6, sqrt(rest)), hence prime
  }
  return {root, part};
}

bool is_prime_small(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace simvol::fields
