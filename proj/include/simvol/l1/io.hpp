#pragma once

// JSON forms of complexes and witnesses.
//
// Complex: {"dimension": d, "top_simplices": [[v, ...], ...],
//           "orientations": [+-1, ...]}   (orientations optional)
// Witness: {"complex": <complex>, "m": m, "n": n,
//           "terms": [{"coefficient": c, "r": r, "s": s, "map": [v, ...]}, ...]}
//
// A witness file carries its complex so it can be re-verified on its own.

#include <string>

#include <json.hpp>

#include "simvol/l1/complex.hpp"
#include "simvol/l1/witness.hpp"

namespace simvol::l1 {

using Json = nlohmann::json;

Json complex_to_json(const SimplicialComplex& complex);
// Throws std::invalid_argument on malformed input.
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::string& path);

struct WitnessFile {
  SimplicialComplex complex;
  Witness witness;
};

Json witness_to_json(const SimplicialComplex& complex, const Witness& witness);
WitnessFile witness_from_json(const Json& j);
WitnessFile load_witness(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace simvol::l1
