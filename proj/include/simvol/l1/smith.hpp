#pragma once

// Dense integer matrices and Smith normal form with unimodular transforms.

#include <cstddef>
#include <optional>
#include <vector>

#include "simvol/exact/rational.hpp"

namespace simvol::l1 {

using exact::Integer;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> operator*(const std::vector<Integer>& x) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<Integer> column(std::size_t j) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// u * a * v = d with d diagonal, d[i][i] > 0 for i < rank, d[i][i] | d[i+1][i+1],
// and u, v unimodular with the given inverses.
struct SmithForm {
  IntMatrix d;
  IntMatrix u, u_inv;
  IntMatrix v, v_inv;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Some integer x with a x = rhs, or nullopt if none exists.
std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& rhs);

}  // namespace simvol::l1
