#pragma once

// The sequence alpha_n = 24 arccos(1 - 2^(-n-1)) / pi, the elliptic matrices
// g_n in SL_2(Z[1/2]), rotation numbers and scl of their lifts, and the
// simplicial-volume values K * alpha_n. K is a caller-supplied positive
// integer; every value is reported per unit K when K = 1.

#include <optional>

#include "simvol/exact/dyadic.hpp"
#include "simvol/exact/rational.hpp"

namespace simvol::scl {

using exact::DyadicInterval;
using exact::Rational;

class Matrix2 {
 public:
  // Throws std::invalid_argument unless ad - bc = 1 and every denominator is
  // a power of two.
  Matrix2(Rational a, Rational b, Rational c, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational determinant() const { return a_ * d_ - b_ * c_; }
  Rational trace() const { return a_ + d_; }

  static Matrix2 identity() { return {1, 0, 0, 1}; }

 private:
  Rational a_, b_, c_, d_;
};

// g_n = (2, 1 + 2^(1-n); -1, -2^-n) for n >= 1.
Matrix2 g_matrix(long n);

// arccos(tr/2)/pi; requires |tr| <= 2 (std::domain_error otherwise).
DyadicInterval rot_lift(const Matrix2& g, long bits);

// |rot|/2.
DyadicInterval scl_lift(const Matrix2& g, long bits);

struct AlphaValue {
  long n;
  DyadicInterval enclosure;
  std::optional<Rational> exact;  // only for n = 0, where alpha_0 = 8
};

// 1 - 2^(-n-1) = cos(pi alpha_n / 24).
Rational alpha_cosine(long n);

AlphaValue alpha(long n, long bits);

// K * alpha_n.
DyadicInterval simvol_value(long n, long K, long bits);

// K * alpha_n / 48 = scl of h_n = (lift of g_n)^K.
DyadicInterval scl_h(long n, long K, long bits);

}  // namespace simvol::scl
