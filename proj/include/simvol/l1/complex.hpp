#pragma once

// Finite pure simplicial complexes and integral simplicial chains.
//
// A simplex is a strictly increasing vertex tuple. Chains store oriented
// simplices in that sorted form; an arbitrary vertex order is normalized with
// the sign of the sorting permutation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simvol/exact/rational.hpp"

namespace simvol::l1 {

using exact::Integer;
using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;

// Sorts s in place. Returns 0 if a vertex repeats, otherwise the sign of the
// sorting permutation.
int orient(Simplex& s);

std::string to_string(const Simplex& s);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // The face closure of `top_simplices`, all of dimension d. Throws
  // std::invalid_argument on wrong sizes, unsorted or repeated vertices, or
  // duplicate top simplices. Orientations (+-1), when given, follow the input
  // order of the top simplices.
  SimplicialComplex(int dimension, std::vector<Simplex> top_simplices,
                    std::optional<std::vector<int>> orientations = std::nullopt);

  int dimension() const { return dimension_; }

  // Sorted lexicographically. Empty outside [0, d].
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  const std::vector<Simplex>& top_simplices() const { return simplices(dimension_); }

  // s must be sorted.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  // Aligned with top_simplices() (sorted order), when supplied.
  const std::optional<std::vector<int>>& orientations() const { return orientations_; }

  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.dimension_ == b.dimension_ && a.simplices_ == b.simplices_ && a.orientations_ == b.orientations_;
  }

 private:
  int dimension_ = -1;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::optional<std::vector<int>> orientations_;
};

class Chain {
 public:
  explicit Chain(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }

  // Adds coeff * [vertices] in the orientation given by the vertex order.
  // Degenerate tuples contribute nothing.
  void add(Simplex vertices, const Integer& coeff);

  const std::map<Simplex, Integer>& terms() const { return terms_; }
  Integer coeff(const Simplex& sorted) const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer norm() const;

  Chain boundary() const;
  Chain scaled(const Integer& factor) const;

  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a += b.scaled(-1); }
  Chain operator-() const { return scaled(-1); }
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int degree_;
  std::map<Simplex, Integer> terms_;  // no zero coefficients
};

}  // namespace simvol::l1
