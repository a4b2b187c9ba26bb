#pragma once

// Barycentric subdivision of complexes and chains, and the iterated
// subdivisions Sd^r(Delta^d) of the standard simplex used as domains of
// combinatorial singular simplices.

#include <map>
#include <vector>

#include "simvol/exact/rational.hpp"
#include "simvol/l1/complex.hpp"

namespace simvol::l1 {

// One subdivision step. The vertices of Sd(K) are 0 .. N-1, one per simplex of
// K, numbered by (dimension, lexicographic order); carrier[j] is the simplex
// whose barycenter vertex j is.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<Simplex> carrier;
  std::map<Simplex, Vertex> barycenter;
};

Subdivision subdivide(const SimplicialComplex& complex);

// Sd_*: sd(v) = b_v, sd(s) = b_s * sd(boundary s).
Chain subdivide_chain(const Subdivision& sd, const Chain& chain);

// Sd^times(K) together with the composite chain map.
class IteratedSubdivision {
 public:
  IteratedSubdivision(const SimplicialComplex& base, int times);

  int times() const { return static_cast<int>(levels_.size()); }
  // Level 0 is the base complex.
  const SimplicialComplex& complex(int level) const;
  const SimplicialComplex& complex() const { return complex(times()); }
  const Subdivision& step(int level) const { return levels_.at(level - 1); }

  // Applies Sd_* from level `from` up to level `to`.
  Chain push(const Chain& chain, int from, int to) const;
  Chain push(const Chain& chain) const { return push(chain, 0, times()); }

 private:
  SimplicialComplex base_;
  std::vector<Subdivision> levels_;
};

IteratedSubdivision barycentric_subdivide(const SimplicialComplex& complex, int times);

// Sd^r(Delta^d) with vertices numbered by their barycentric coordinates in
// decreasing lexicographic order, so vertex 0 is the corner e_0.
struct StandardSubdivision {
  int d = 0;
  int r = 0;
  std::vector<std::vector<exact::Rational>> coordinates;
  std::vector<Simplex> top;   // sorted vertex tuples
  std::vector<int> top_sign;  // coefficient in Sd^r_*([0..d])
  std::vector<std::pair<Vertex, Vertex>> edges;
  // face_inclusion[i][j]: the vertex here that vertex j of Sd^r(Delta^(d-1))
  // lands on under the i-th face map (coordinate i set to 0). Empty for d = 0.
  std::vector<std::vector<Vertex>> face_inclusion;

  std::size_t vertex_count() const { return coordinates.size(); }
};

StandardSubdivision standard_subdivision(int d, int r);

}  // namespace simvol::l1
