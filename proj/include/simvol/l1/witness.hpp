#pragma once

// Combinatorial singular chains and re-verifiable certificates for
// ||m [T]||_1 <= n.
//
// A combinatorial simplex of depth (r, s) is a vertex map from
// Sd^r(Delta^d) (vertices numbered as in StandardSubdivision) to the vertex
// labels of Sd^s(T) that is simplicial, degeneracies allowed. Its i-th
// singular face is the restriction to the i-th face of Delta^d, a
// combinatorial simplex of dimension d-1 at the same depths.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "simvol/l1/complex.hpp"
#include "simvol/l1/subdivision.hpp"

namespace simvol::l1 {

struct CombinatorialSimplex {
  int r = 0;
  int s = 0;
  std::vector<Vertex> vertex_map;

  friend auto operator<=>(const CombinatorialSimplex&, const CombinatorialSimplex&) = default;
};

struct WitnessTerm {
  long coefficient = 0;
  CombinatorialSimplex simplex;

  friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

struct Witness {
  long m = 1;
  long n = 0;
  std::vector<WitnessTerm> terms;

  long norm() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Formal singular boundary: sum_j c_j sum_i (-1)^i face_i(f_j), keyed by the
// face simplices. Zero coefficients are dropped.
std::map<CombinatorialSimplex, long> singular_boundary(const std::vector<WitnessTerm>& terms,
                                                       const std::vector<StandardSubdivision>& domains);

// f_#(Sd^r_*[Delta^d]) as a simplicial chain of the target complex
// (degenerate images contribute 0).
Chain push_forward(const StandardSubdivision& domain, const CombinatorialSimplex& f);

struct Verification {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Rebuilds every ingredient from T and checks simpliciality, the cycle
// condition, the class condition (pushed chain minus m Sd^S_*(z) is a
// boundary in Sd^S(T), S the largest target depth) and the norm bound.
Verification verify_witness(const SimplicialComplex& complex, const Witness& witness);

// Witness for m1 + m2 with n1 + n2 from witnesses for m1 and m2.
Witness concatenate(const Witness& a, const Witness& b);

}  // namespace simvol::l1
