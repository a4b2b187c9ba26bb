#include "simvol/l1/io.hpp"

#include <fstream>
#include <stdexcept>

namespace simvol::l1 {

namespace {

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<long>();
}

Simplex vertex_list(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("simplex must be an array of vertices");
  Simplex s;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw std::invalid_argument("vertex labels must be non-negative integers");
    s.push_back(v.get<Vertex>());
  }
  return s;
}

}  // namespace

Json complex_to_json(const SimplicialComplex& complex) {
  Json j;
  j["dimension"] = complex.dimension();
  j["top_simplices"] = complex.top_simplices();
  if (complex.orientations()) j["orientations"] = *complex.orientations();
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  const long d = integer(field(j, "dimension"), "dimension");
  if (d < 0) throw std::invalid_argument("dimension must be >= 0");
  const Json& tops = field(j, "top_simplices");
  if (!tops.is_array()) throw std::invalid_argument("top_simplices must be an array");
  std::vector<Simplex> simplices;
  for (const auto& t : tops) simplices.push_back(vertex_list(t));
  std::optional<std::vector<int>> orientations;
  if (j.contains("orientations")) {
    std::vector<int> o;
    for (const auto& x : j.at("orientations")) o.push_back(static_cast<int>(integer(x, "orientation")));
    orientations = std::move(o);
  }
  SimplicialComplex k(static_cast<int>(d), std::move(simplices), std::move(orientations));
  // An explicit face list must be exactly the face closure.
  if (j.contains("simplices")) {
    std::size_t listed = 0;
    for (const auto& s : j.at("simplices")) {
      Simplex v = vertex_list(s);
      if (!k.contains(v)) throw std::invalid_argument("listed simplex " + to_string(v) + " is not a face of a top simplex");
      ++listed;
    }
    std::size_t total = 0;
    for (int i = 0; i <= k.dimension(); ++i) total += k.count(i);
    if (listed != total) throw std::invalid_argument("listed simplices do not match the face closure");
  }
  return k;
}

SimplicialComplex load_complex(const std::string& path) { return complex_from_json(read_file(path)); }

Json witness_to_json(const SimplicialComplex& complex, const Witness& witness) {
  Json j;
  j["complex"] = complex_to_json(complex);
  j["m"] = witness.m;
  j["n"] = witness.n;
  j["terms"] = Json::array();
  for (const auto& t : witness.terms) {
    j["terms"].push_back(
        {{"coefficient", t.coefficient}, {"r", t.simplex.r}, {"s", t.simplex.s}, {"map", t.simplex.vertex_map}});
  }
  return j;
}

WitnessFile witness_from_json(const Json& j) {
  WitnessFile out{complex_from_json(field(j, "complex")), {}};
  out.witness.m = integer(field(j, "m"), "m");
  out.witness.n = integer(field(j, "n"), "n");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
  for (const auto& t : terms) {
    WitnessTerm term;
    term.coefficient = integer(field(t, "coefficient"), "coefficient");
    term.simplex.r = static_cast<int>(integer(field(t, "r"), "r"));
    term.simplex.s = static_cast<int>(integer(field(t, "s"), "s"));
    term.simplex.vertex_map = vertex_list(field(t, "map"));
    out.witness.terms.push_back(std::move(term));
  }
  return out;
}

WitnessFile load_witness(const std::string& path) { return witness_from_json(read_file(path)); }

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump() << '\n';
}

}  // namespace simvol::l1
