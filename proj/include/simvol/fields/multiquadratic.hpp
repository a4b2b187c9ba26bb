#pragma once

// Exact arithmetic in Q(i, sqrt(m_1), ..., sqrt(m_k)) for pairwise coprime
// squarefree radicands m_j >= 2.
//
// An element is a rational coefficient vector over the radical products
// e_S = i^[i in S] * prod_{j in S} sqrt(m_j), indexed by a bit mask S. When
// the basis includes i it occupies bit 0 and radicand j occupies bit j+1;
// without i, radicand j occupies bit j. The products e_S are taken to be
// linearly independent over Q (Besicovitch); nothing here re-proves that.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simvol/exact/dyadic.hpp"
#include "simvol/exact/rational.hpp"

namespace simvol::fields {

using exact::Integer;
using exact::Rational;

class RadicalBasis {
 public:
  // Radicands are sorted. Throws std::invalid_argument unless each is
  // squarefree and >= 2 and they are pairwise coprime.
  RadicalBasis(std::vector<Integer> radicands, bool include_i);

  std::size_t dimension() const { return std::size_t{1} << bits(); }
  std::size_t bits() const { return radicands_.size() + (include_i_ ? 1 : 0); }
  bool include_i() const { return include_i_; }
  const std::vector<Integer>& radicands() const { return radicands_; }

  std::size_t i_mask() const { return include_i_ ? 1 : 0; }
  std::size_t radical_mask(std::size_t j) const { return std::size_t{1} << (j + (include_i_ ? 1 : 0)); }
  std::optional<std::size_t> index_of(const Integer& radicand) const;

  // Product of the radicands shared by two masks.
  const Integer& common_product(std::size_t mask) const { return common_product_[mask]; }

  std::string label(std::size_t mask) const;

  friend bool operator==(const RadicalBasis& a, const RadicalBasis& b) {
    return a.include_i_ == b.include_i_ && a.radicands_ == b.radicands_;
  }

 private:
  std::vector<Integer> radicands_;
  bool include_i_;
  std::vector<Integer> common_product_;
};

using BasisPtr = std::shared_ptr<const RadicalBasis>;

BasisPtr make_basis(std::vector<Integer> radicands, bool include_i = true);

class FieldElement {
 public:
  // coeffs.size() must equal the basis dimension.
  FieldElement(BasisPtr basis, std::vector<Rational> coeffs);

  static FieldElement zero(BasisPtr basis);
  static FieldElement rational(BasisPtr basis, const Rational& q);
  static FieldElement imaginary_unit(BasisPtr basis);  // requires include_i
  static FieldElement sqrt_of(BasisPtr basis, const Integer& radicand);
  static FieldElement basis_element(BasisPtr basis, std::size_t mask, const Rational& coeff = 1);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t mask) const { return coeffs_.at(mask); }
  bool is_zero() const;

  // Throws std::invalid_argument on a basis mismatch.
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement scaled(const Rational& q) const;

  // Dense solve of a * x = 1 over Q; std::domain_error for zero.
  FieldElement inverse() const;
  FieldElement pow(long exponent) const;
  // Complex conjugation i -> -i.
  FieldElement conjugate() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string str() const;

 private:
  BasisPtr basis_;
  std::vector<Rational> coeffs_;
};

enum class FieldOp { Add, Sub, Mul, Inverse };

// Inverse ignores b.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

struct ComplexInterval {
  exact::DyadicInterval re;
  exact::DyadicInterval im;
};

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);

// Numerical embedding sqrt(m) -> positive real root, i -> imaginary unit,
// with certified enclosures at roughly `bits` bits.
ComplexInterval embed(const FieldElement& x, long bits);

struct SquarefreeSplit {
  Integer square_root;  // s
  Integer squarefree;   // m, with n = s^2 m
};

// Trial division up to 10^6. A remaining cofactor below 10^12 is prime; a
// larger one is rejected with std::domain_error.
SquarefreeSplit squarefree_split(const Integer& n);

bool is_prime_small(long p);

}  // namespace simvol::fields
