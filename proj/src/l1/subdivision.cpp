#include "simvol/l1/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simvol::l1 {

namespace {

// All maximal flags s_0 < s_1 < ... < s_d = top, as vertex lists of
// barycenters in increasing dimension.
void flags(const Simplex& s, const std::map<Simplex, Vertex>& barycenter, std::vector<Vertex>& tail,
           std::vector<Simplex>& out) {
  tail.push_back(barycenter.at(s));
  if (s.size() == 1) {
    Simplex flag(tail.rbegin(), tail.rend());
    orient(flag);
    out.push_back(std::move(flag));
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      flags(f, barycenter, tail, out);
    }
  }
  tail.pop_back();
}

Chain cone(Vertex apex, const Chain& c) {
  Chain out(c.degree() + 1);
  for (const auto& [s, coeff] : c.terms()) {
    Simplex t;
    t.reserve(s.size() + 1);
    t.push_back(apex);
    t.insert(t.end(), s.begin(), s.end());
    out.add(std::move(t), coeff);
  }
  return out;
}

Chain subdivide_simplex(const Subdivision& sd, const Simplex& s) {
  const Vertex b = sd.barycenter.at(s);
  if (s.size() == 1) {
    Chain c(0);
    c.add({b}, 1);
    return c;
  }
  Chain boundary_image(static_cast<int>(s.size()) - 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<long>(i));
    Chain part = subdivide_simplex(sd, f);
    boundary_image += i % 2 == 0 ? part : -part;
  }
  return cone(b, boundary_image);
}

}  // namespace

Subdivision subdivide(const SimplicialComplex& complex) {
  Subdivision sd;
  for (int k = 0; k <= complex.dimension(); ++k) {
    for (const auto& s : complex.simplices(k)) {
      sd.barycenter.emplace(s, static_cast<Vertex>(sd.carrier.size()));
      sd.carrier.push_back(s);
    }
  }
  std::vector<Simplex> tops;
  std::vector<Vertex> tail;
  for (const auto& s : complex.top_simplices()) flags(s, sd.barycenter, tail, tops);
  sd.complex = SimplicialComplex(complex.dimension(), std::move(tops));
  return sd;
}

Chain subdivide_chain(const Subdivision& sd, const Chain& chain) {
  Chain out(chain.degree());
  for (const auto& [s, coeff] : chain.terms()) {
    if (!sd.barycenter.count(s)) {
      throw std::invalid_argument("chain term " + to_string(s) + " is not a simplex of the subdivided complex");
    }
    out += subdivide_simplex(sd, s).scaled(coeff);
  }
  return out;
}

IteratedSubdivision::IteratedSubdivision(const SimplicialComplex& base, int times) : base_(base) {
  if (times < 0) {
    throw std::invalid_argument("subdivision count must be >= 0");
  }
  for (int t = 0; t < times; ++t) {
    levels_.push_back(subdivide(t == 0 ? base_ : levels_.back().complex));
  }
}

const SimplicialComplex& IteratedSubdivision::complex(int level) const {
  if (level < 0 || level > times()) {
    throw std::out_of_range("subdivision level out of range");
  }
  return level == 0 ? base_ : levels_[level - 1].complex;
}

Chain IteratedSubdivision::push(const Chain& chain, int from, int to) const {
  if (from < 0 || to > times() || from > to) {
    throw std::out_of_range("subdivision levels out of range");
  }
  Chain c = chain;
  for (int level = from; level < to; ++level) c = subdivide_chain(levels_[level], c);
  return c;
}

IteratedSubdivision barycentric_subdivide(const SimplicialComplex& complex, int times) {
  return IteratedSubdivision(complex, times);
}

StandardSubdivision standard_subdivision(int d, int r) {
  if (d < 0 || r < 0) {
    throw std::invalid_argument("standard_subdivision needs d >= 0 and r >= 0");
  }
  Simplex corners(d + 1);
  std::iota(corners.begin(), corners.end(), 0);
  const SimplicialComplex simplex(d, {corners});
  const IteratedSubdivision tower(simplex, r);

  // Barycentric coordinates level by level.
  std::vector<std::vector<exact::Rational>> coords(d + 1, std::vector<exact::Rational>(d + 1));
  for (int i = 0; i <= d; ++i) coords[i][i] = 1;
  for (int level = 1; level <= r; ++level) {
    const Subdivision& sd = tower.step(level);
    std::vector<std::vector<exact::Rational>> next;
    for (const auto& s : sd.carrier) {
      std::vector<exact::Rational> c(d + 1);
      for (Vertex v : s) {
        for (int i = 0; i <= d; ++i) c[i] += coords[v][i];
      }
      for (auto& x : c) x /= exact::Rational(static_cast<long>(s.size()));
      next.push_back(std::move(c));
    }
    coords = std::move(next);
  }

  // Relabel by decreasing lexicographic coordinates.
  std::vector<Vertex> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return coords[a] > coords[b]; });
  std::vector<Vertex> relabel(coords.size());
  StandardSubdivision out;
  out.d = d;
  out.r = r;
  for (std::size_t k = 0; k < order.size(); ++k) {
    relabel[order[k]] = static_cast<Vertex>(k);
    out.coordinates.push_back(coords[order[k]]);
  }

  Chain whole(d);
  whole.add(corners, 1);
  const Chain pieces = tower.push(whole);
  for (const auto& [s, c] : pieces.terms()) {
    Simplex t;
    for (Vertex v : s) t.push_back(relabel[v]);
    const int sign = orient(t);
    out.top.push_back(std::move(t));
    out.top_sign.push_back(sign * static_cast<int>(c.get_si()));
  }
  // Keep top simplices in sorted order.
  std::vector<std::size_t> idx(out.top.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return out.top[a] < out.top[b]; });
  std::vector<Simplex> top;
  std::vector<int> sign;
  for (std::size_t i : idx) {
    top.push_back(out.top[i]);
    sign.push_back(out.top_sign[i]);
  }
  out.top = std::move(top);
  out.top_sign = std::move(sign);

  for (const auto& e : tower.complex().simplices(1)) {
    Vertex a = relabel[e[0]];
    Vertex b = relabel[e[1]];
    if (a > b) std::swap(a, b);
    out.edges.emplace_back(a, b);
  }
  std::sort(out.edges.begin(), out.edges.end());

  if (d >= 1) {
    const StandardSubdivision face = standard_subdivision(d - 1, r);
    std::map<std::vector<exact::Rational>, Vertex> lookup;
    for (std::size_t v = 0; v < out.coordinates.size(); ++v) lookup.emplace(out.coordinates[v], static_cast<Vertex>(v));
    for (int i = 0; i <= d; ++i) {
      std::vector<Vertex> inclusion;
      for (const auto& c : face.coordinates) {
        std::vector<exact::Rational> full = c;
        full.insert(full.begin() + i, exact::Rational(0));
        inclusion.push_back(lookup.at(full));
      }
      out.face_inclusion.push_back(std::move(inclusion));
    }
  }
  return out;
}

}  // namespace simvol::l1
