#include "simvol/l1/smith.hpp"

#include <stdexcept>
#include <utility>

namespace simvol::l1 {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("matrix-vector size mismatch");
  }
  std::vector<Integer> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(d.at(i, i));
  return f;
}

namespace {

// Row and column operations applied to d together with the transforms:
// a row op E on d is applied as u <- E u, u_inv <- u_inv E^-1; a column op F
// as v <- v F, v_inv <- F^-1 v_inv.
class Reducer {
 public:
  explicit Reducer(SmithForm& f) : f_(f) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < f_.d.cols(); ++c) std::swap(f_.d.at(i, c), f_.d.at(j, c));
    for (std::size_t c = 0; c < f_.u.cols(); ++c) std::swap(f_.u.at(i, c), f_.u.at(j, c));
    for (std::size_t r = 0; r < f_.u_inv.rows(); ++r) std::swap(f_.u_inv.at(r, i), f_.u_inv.at(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < f_.d.rows(); ++r) std::swap(f_.d.at(r, i), f_.d.at(r, j));
    for (std::size_t r = 0; r < f_.v.rows(); ++r) std::swap(f_.v.at(r, i), f_.v.at(r, j));
    for (std::size_t c = 0; c < f_.v_inv.cols(); ++c) std::swap(f_.v_inv.at(i, c), f_.v_inv.at(j, c));
  }

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < f_.d.cols(); ++c) {
      if (f_.d.at(j, c) != 0) f_.d.at(i, c) += q * f_.d.at(j, c);
    }
    for (std::size_t c = 0; c < f_.u.cols(); ++c) {
      if (f_.u.at(j, c) != 0) f_.u.at(i, c) += q * f_.u.at(j, c);
    }
    // inverse: col_j -= q * col_i
    for (std::size_t r = 0; r < f_.u_inv.rows(); ++r) {
      if (f_.u_inv.at(r, i) != 0) f_.u_inv.at(r, j) -= q * f_.u_inv.at(r, i);
    }
  }

  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < f_.d.rows(); ++r) {
      if (f_.d.at(r, j) != 0) f_.d.at(r, i) += q * f_.d.at(r, j);
    }
    for (std::size_t r = 0; r < f_.v.rows(); ++r) {
      if (f_.v.at(r, j) != 0) f_.v.at(r, i) += q * f_.v.at(r, j);
    }
    // inverse: row_j -= q * row_i
    for (std::size_t c = 0; c < f_.v_inv.cols(); ++c) {
      if (f_.v_inv.at(i, c) != 0) f_.v_inv.at(j, c) -= q * f_.v_inv.at(i, c);
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < f_.d.cols(); ++c) f_.d.at(i, c) = -f_.d.at(i, c);
    for (std::size_t c = 0; c < f_.u.cols(); ++c) f_.u.at(i, c) = -f_.u.at(i, c);
    for (std::size_t r = 0; r < f_.u_inv.rows(); ++r) f_.u_inv.at(r, i) = -f_.u_inv.at(r, i);
  }

 private:
  SmithForm& f_;
};

Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
              IntMatrix::identity(a.cols()), 0};
  Reducer red(f);
  IntMatrix& d = f.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_pivot = [&]() {
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d.at(i, j) != 0 && (pi == rows || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
            pi = i;
            pj = j;
            if (abs(d.at(i, j)) == 1) break;
          }
        }
        if (pi != rows && abs(d.at(pi, pj)) == 1) break;
      }
      if (pi == rows) return false;
      red.swap_rows(t, pi);
      red.swap_cols(t, pj);
      return true;
    };
    if (!place_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        red.add_row(i, t, -trunc_quotient(d.at(i, t), d.at(t, t)));
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        red.add_col(j, t, -trunc_quotient(d.at(t, j), d.at(t, t)));
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_pivot();
        continue;
      }
      // Divisibility: fold a row with a non-multiple entry into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d.at(i, j) != 0 && !mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            red.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d.at(t, t) < 0) red.negate_row(t);
    f.rank = t + 1;
  }
  return f;
}

std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& rhs) {
  if (rhs.size() != snf.d.rows()) {
    throw std::invalid_argument("right-hand side has the wrong length");
  }
  // d (v_inv x) = u rhs
  const std::vector<Integer> b = snf.u * rhs;
  std::vector<Integer> y(snf.d.cols());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i < snf.rank) {
      if (!mpz_divisible_p(b[i].get_mpz_t(), snf.d.at(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), b[i].get_mpz_t(), snf.d.at(i, i).get_mpz_t());
    } else if (b[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v * y;
}

}  // namespace simvol::l1
