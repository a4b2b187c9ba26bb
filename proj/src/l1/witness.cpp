#include "simvol/l1/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "simvol/l1/homology.hpp"

namespace simvol::l1 {

long Witness::norm() const {
  long total = 0;
  for (const auto& t : terms) total += std::labs(t.coefficient);
  return total;
}

std::map<CombinatorialSimplex, long> singular_boundary(const std::vector<WitnessTerm>& terms,
                                                       const std::vector<StandardSubdivision>& domains) {
  std::map<CombinatorialSimplex, long> out;
  for (const auto& term : terms) {
    const StandardSubdivision& dom = domains.at(term.simplex.r);
    for (std::size_t i = 0; i < dom.face_inclusion.size(); ++i) {
      CombinatorialSimplex face{term.simplex.r, term.simplex.s, {}};
      for (Vertex v : dom.face_inclusion[i]) face.vertex_map.push_back(term.simplex.vertex_map.at(v));
      long& c = out[face];
      c += i % 2 == 0 ? term.coefficient : -term.coefficient;
      if (c == 0) out.erase(face);
    }
  }
  return out;
}

Chain push_forward(const StandardSubdivision& domain, const CombinatorialSimplex& f) {
  Chain c(domain.d);
  for (std::size_t t = 0; t < domain.top.size(); ++t) {
    Simplex image;
    for (Vertex v : domain.top[t]) image.push_back(f.vertex_map.at(v));
    c.add(std::move(image), domain.top_sign[t]);
  }
  return c;
}

Verification verify_witness(const SimplicialComplex& complex, const Witness& w) {
  auto fail = [](std::string reason) { return Verification{false, std::move(reason)}; };
  if (w.m < 1) return fail("m must be positive");
  if (w.n < 0) return fail("n must be non-negative");

  Chain z;
  try {
    z = fundamental_cycle(complex);
  } catch (const std::exception& e) {
    return fail(std::string("no fundamental cycle: ") + e.what());
  }
  const int d = complex.dimension();

  int max_r = 0;
  int max_s = 0;
  for (const auto& t : w.terms) {
    if (t.simplex.r < 0 || t.simplex.s < 0) return fail("negative subdivision depth");
    max_r = std::max(max_r, t.simplex.r);
    max_s = std::max(max_s, t.simplex.s);
  }
  std::vector<StandardSubdivision> domains;
  for (int r = 0; r <= max_r; ++r) domains.push_back(standard_subdivision(d, r));
  const IteratedSubdivision tower(complex, max_s);

  // (1) simpliciality
  std::vector<WitnessTerm> seen;
  for (std::size_t j = 0; j < w.terms.size(); ++j) {
    const WitnessTerm& t = w.terms[j];
    const std::string where = "term " + std::to_string(j) + ": ";
    if (t.coefficient == 0) return fail(where + "zero coefficient");
    const StandardSubdivision& dom = domains[t.simplex.r];
    const SimplicialComplex& target = tower.complex(t.simplex.s);
    if (t.simplex.vertex_map.size() != dom.vertex_count()) {
      return fail(where + "vertex map has " + std::to_string(t.simplex.vertex_map.size()) + " entries, expected " +
                  std::to_string(dom.vertex_count()));
    }
    for (Vertex v : t.simplex.vertex_map) {
      if (!target.contains({v})) return fail(where + "vertex " + std::to_string(v) + " is not in the target");
    }
    for (const auto& top : dom.top) {
      Simplex image;
      for (Vertex v : top) image.push_back(t.simplex.vertex_map[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!target.contains(image)) {
        return fail(where + "not simplicial: " + to_string(top) + " maps onto " + to_string(image));
      }
    }
    for (const auto& other : seen) {
      if (other.simplex == t.simplex) return fail(where + "repeated singular simplex");
    }
    seen.push_back(t);
  }

  // (2) cycle condition
  const auto faces = singular_boundary(w.terms, domains);
  if (!faces.empty()) {
    return fail("not a cycle: " + std::to_string(faces.size()) + " singular faces fail to cancel");
  }

  // (3) class condition in Sd^S(T)
  Chain pushed(d);
  for (const auto& t : w.terms) {
    pushed += tower.push(push_forward(domains[t.simplex.r], t.simplex), t.simplex.s, max_s).scaled(t.coefficient);
  }
  const Chain difference = pushed - tower.push(z).scaled(w.m);
  if (!solve_boundary(tower.complex(), difference)) {
    return fail("class condition fails: chain does not represent " + std::to_string(w.m) + "[T]");
  }

  // (4) norm
  if (w.norm() > w.n) {
    return fail("norm " + std::to_string(w.norm()) + " exceeds n = " + std::to_string(w.n));
  }
  return {true, ""};
}

Witness concatenate(const Witness& a, const Witness& b) {
  std::map<CombinatorialSimplex, long> merged;
  for (const auto* w : {&a, &b}) {
    for (const auto& t : w->terms) merged[t.simplex] += t.coefficient;
  }
  Witness out{a.m + b.m, a.n + b.n, {}};
  for (auto& [s, c] : merged) {
    if (c != 0) out.terms.push_back({c, s});
  }
  return out;
}

}  // namespace simvol::l1
