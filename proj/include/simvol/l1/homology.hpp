#pragma once

// Simplicial homology over Z and Q via Smith normal form, boundary solving,
// and fundamental cycles of closed orientable pseudomanifolds.

#include <optional>
#include <string>
#include <vector>

#include "simvol/l1/complex.hpp"
#include "simvol/l1/smith.hpp"

namespace simvol::l1 {

enum class Coefficients { Integers, Rationals };

// Rows are indexed by the (k-1)-simplices, columns by the k-simplices, both in
// the complex's sorted order. For k = 0 the matrix has no rows.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int k);

// Coordinates of a k-chain in the sorted k-simplex basis; std::invalid_argument
// if a term is not a simplex of the complex.
std::vector<Integer> to_coordinates(const SimplicialComplex& complex, const Chain& chain);
Chain from_coordinates(const SimplicialComplex& complex, int k, const std::vector<Integer>& coords);

struct HomologyGroup {
  int degree = 0;
  Coefficients coefficients = Coefficients::Integers;
  std::size_t betti = 0;
  std::vector<Integer> torsion;       // invariant factors > 1 (Z only)
  std::vector<Chain> free_generators;  // cycles representing a basis of the free part

  // "Z^2 + Z/2", "Q", "0".
  std::string str() const;
};

HomologyGroup homology(const SimplicialComplex& complex, int degree,
                       Coefficients coefficients = Coefficients::Integers);

// Some integral (k+1)-chain x with boundary(x) = c, if c is a boundary.
std::optional<Chain> solve_boundary(const SimplicialComplex& complex, const Chain& c);

// The signed sum of compatibly oriented top simplices. Requires every
// (d-1)-simplex to lie in exactly two top simplices, the top simplices to be
// connected through shared (d-1)-faces, and a consistent orientation; throws
// std::domain_error naming the failed condition. Supplied orientations must
// agree with the computed one up to a global sign and then fix the sign.
Chain fundamental_cycle(const SimplicialComplex& complex);

}  // namespace simvol::l1
