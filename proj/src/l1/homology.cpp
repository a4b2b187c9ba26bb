#include "simvol/l1/homology.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace simvol::l1 {

IntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  const std::size_t rows = k >= 1 ? complex.count(k - 1) : 0;
  const std::size_t cols = complex.count(k);
  IntMatrix m(rows, cols);
  if (k < 1) return m;
  const auto& simplices = complex.simplices(k);
  for (std::size_t j = 0; j < cols; ++j) {
    const Simplex& s = simplices[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      m.at(*complex.index_of(f), j) = i % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

std::vector<Integer> to_coordinates(const SimplicialComplex& complex, const Chain& chain) {
  std::vector<Integer> x(complex.count(chain.degree()));
  for (const auto& [s, c] : chain.terms()) {
    const auto idx = complex.index_of(s);
    if (!idx) {
      throw std::invalid_argument("chain term " + to_string(s) + " is not a simplex of the complex");
    }
    x[*idx] = c;
  }
  return x;
}

Chain from_coordinates(const SimplicialComplex& complex, int k, const std::vector<Integer>& coords) {
  const auto& simplices = complex.simplices(k);
  if (coords.size() != simplices.size()) {
    throw std::invalid_argument("coordinate vector has the wrong length");
  }
  Chain c(k);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) c.add(simplices[i], coords[i]);
  }
  return c;
}

std::string HomologyGroup::str() const {
  const std::string ring = coefficients == Coefficients::Integers ? "Z" : "Q";
  std::string out;
  if (betti > 0) {
    out = ring;
    if (betti > 1) out += "^" + std::to_string(betti);
  }
  for (const auto& t : torsion) {
    out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  }
  return out.empty() ? "0" : out;
}

HomologyGroup homology(const SimplicialComplex& complex, int degree, Coefficients coefficients) {
  HomologyGroup h;
  h.degree = degree;
  h.coefficients = coefficients;
  if (degree < 0 || degree > complex.dimension()) return h;

  const std::size_t n = complex.count(degree);
  // Cycles: the last n - r columns of v, where u A v = d for A = boundary_k.
  const SmithForm dk = smith_normal_form(boundary_matrix(complex, degree));
  const std::size_t r = dk.rank;
  const std::size_t z = n - r;
  if (z == 0) return h;

  // Boundaries in cycle coordinates: rows r.. of v_inv * boundary_{k+1}.
  const IntMatrix next = boundary_matrix(complex, degree + 1);
  const IntMatrix in_v = dk.v_inv * next;
  IntMatrix b(z, next.cols());
  for (std::size_t i = 0; i < z; ++i) {
    for (std::size_t j = 0; j < next.cols(); ++j) b.at(i, j) = in_v.at(r + i, j);
  }
  const SmithForm sb = smith_normal_form(b);

  // Cycle basis changed by sb.u_inv: generator i = sum_l v[:, r + l] * u_inv[l][i].
  auto generator = [&](std::size_t i) {
    std::vector<Integer> coords(n);
    for (std::size_t l = 0; l < z; ++l) {
      const Integer& w = sb.u_inv.at(l, i);
      if (w == 0) continue;
      for (std::size_t row = 0; row < n; ++row) coords[row] += dk.v.at(row, r + l) * w;
    }
    return from_coordinates(complex, degree, coords);
  };
  for (std::size_t i = 0; i < sb.rank; ++i) {
    if (coefficients == Coefficients::Integers && sb.d.at(i, i) != 1) h.torsion.push_back(sb.d.at(i, i));
  }
  for (std::size_t i = sb.rank; i < z; ++i) h.free_generators.push_back(generator(i));
  h.betti = z - sb.rank;
  return h;
}

std::optional<Chain> solve_boundary(const SimplicialComplex& complex, const Chain& c) {
  const int k = c.degree() + 1;
  const IntMatrix m = boundary_matrix(complex, k);
  const std::vector<Integer> rhs = to_coordinates(complex, c);
  if (m.cols() == 0) {
    for (const auto& x : rhs) {
      if (x != 0) return std::nullopt;
    }
    return Chain(k);
  }
  const auto x = solve_integer(smith_normal_form(m), rhs);
  if (!x) return std::nullopt;
  return from_coordinates(complex, k, *x);
}

Chain fundamental_cycle(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  if (d < 1) {
    throw std::domain_error("fundamental_cycle needs dimension >= 1");
  }
  const auto& tops = complex.top_simplices();

  // (d-1)-face -> [(top index, sign of the face in that top)]
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> cofaces;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    for (std::size_t i = 0; i < tops[t].size(); ++i) {
      Simplex f = tops[t];
      f.erase(f.begin() + static_cast<long>(i));
      cofaces[f].emplace_back(t, i % 2 == 0 ? 1 : -1);
    }
  }
  for (const auto& [f, list] : cofaces) {
    if (list.size() != 2) {
      throw std::domain_error("not a closed pseudomanifold: face " + to_string(f) + " lies in " +
                              std::to_string(list.size()) + " top simplices");
    }
  }

  std::vector<int> eps(tops.size(), 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency(tops.size());
  for (const auto& [f, list] : cofaces) {
    const auto [a, sa] = list[0];
    const auto [b, sb] = list[1];
    // Induced orientations on the shared face must cancel: eps_b = -eps_a * sa * sb.
    adjacency[a].emplace_back(b, -sa * sb);
    adjacency[b].emplace_back(a, -sa * sb);
  }
  eps[0] = 1;
  std::deque<std::size_t> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& [b, rel] : adjacency[a]) {
      const int want = eps[a] * rel;
      if (eps[b] == 0) {
        eps[b] = want;
        ++reached;
        queue.push_back(b);
      } else if (eps[b] != want) {
        throw std::domain_error("not orientable: inconsistent orientation at top simplex " + to_string(tops[b]));
      }
    }
  }
  if (reached != tops.size()) {
    throw std::domain_error("not connected: " + std::to_string(tops.size() - reached) +
                            " top simplices unreachable through codimension-1 faces");
  }
  if (const auto& given = complex.orientations()) {
    const int flip = (*given)[0] * eps[0];
    for (std::size_t t = 0; t < tops.size(); ++t) {
      if ((*given)[t] != flip * eps[t]) {
        throw std::domain_error("supplied orientations are inconsistent at top simplex " + to_string(tops[t]));
      }
      eps[t] = (*given)[t];
    }
  }

  Chain z(d);
  for (std::size_t t = 0; t < tops.size(); ++t) z.add(tops[t], eps[t]);
  if (!z.boundary().is_zero()) {
    throw std::logic_error("fundamental cycle has nonzero boundary");
  }
  const HomologyGroup h = homology(complex, d);
  if (h.betti != 1 || !(h.free_generators[0] == z || h.free_generators[0] == -z)) {
    throw std::logic_error("oriented sum of top simplices does not generate H_d");
  }
  return z;
}

}  // namespace simvol::l1
