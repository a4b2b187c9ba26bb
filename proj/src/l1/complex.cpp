#include "simvol/l1/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simvol::l1 {

int orient(Simplex& s) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == s[i]) return 0;
  }
  return sign;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "]";
}

SimplicialComplex::SimplicialComplex(int dimension, std::vector<Simplex> top_simplices,
                                     std::optional<std::vector<int>> orientations)
    : dimension_(dimension) {
  if (dimension < 0) {
    throw std::invalid_argument("dimension must be >= 0");
  }
  if (top_simplices.empty()) {
    throw std::invalid_argument("complex has no top simplices");
  }
  if (orientations && orientations->size() != top_simplices.size()) {
    throw std::invalid_argument("orientations must have one entry per top simplex");
  }
  std::map<Simplex, int> tops;
  for (std::size_t t = 0; t < top_simplices.size(); ++t) {
    const Simplex& s = top_simplices[t];
    if (s.size() != static_cast<std::size_t>(dimension + 1)) {
      throw std::invalid_argument("top simplex " + to_string(s) + " does not have " +
                                  std::to_string(dimension + 1) + " vertices");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i - 1] >= s[i]) {
        throw std::invalid_argument("vertices of " + to_string(s) + " are not strictly increasing");
      }
    }
    int o = 1;
    if (orientations) {
      o = (*orientations)[t];
      if (o != 1 && o != -1) {
        throw std::invalid_argument("orientation entries must be +1 or -1");
      }
    }
    if (!tops.emplace(s, o).second) {
      throw std::invalid_argument("duplicate top simplex " + to_string(s));
    }
  }

  std::vector<std::set<Simplex>> faces(dimension + 1);
  for (const auto& [s, o] : tops) {
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) f.push_back(s[i]);
      }
      faces[f.size() - 1].insert(std::move(f));
    }
  }
  simplices_.resize(dimension + 1);
  index_.resize(dimension + 1);
  for (int k = 0; k <= dimension; ++k) {
    simplices_[k].assign(faces[k].begin(), faces[k].end());
    for (std::size_t i = 0; i < simplices_[k].size(); ++i) {
      index_[k].emplace(simplices_[k][i], i);
    }
  }
  if (orientations) {
    std::vector<int> sorted;
    for (const auto& [s, o] : tops) sorted.push_back(o);
    orientations_ = std::move(sorted);
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < 0 || k > dimension_) return kEmpty;
  return simplices_[k];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > static_cast<std::size_t>(dimension_ + 1)) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  const auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension_; ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  }
  return chi;
}

void Chain::add(Simplex vertices, const Integer& coeff) {
  if (vertices.size() != static_cast<std::size_t>(degree_ + 1)) {
    throw std::invalid_argument("simplex " + to_string(vertices) + " has the wrong size for a " +
                                std::to_string(degree_) + "-chain");
  }
  const int sign = orient(vertices);
  if (sign == 0 || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(vertices), 0);
  it->second += sign * coeff;
  if (it->second == 0) terms_.erase(it);
}

Integer Chain::coeff(const Simplex& sorted) const {
  const auto it = terms_.find(sorted);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Chain::norm() const {
  Integer n = 0;
  for (const auto& [s, c] : terms_) n += abs(c);
  return n;
}

Chain Chain::boundary() const {
  Chain out(degree_ - 1);
  if (degree_ == 0) return out;
  for (const auto& [s, c] : terms_) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      out.add(std::move(f), i % 2 == 0 ? Integer(c) : Integer(-c));
    }
  }
  return out;
}

Chain Chain::scaled(const Integer& factor) const {
  Chain out(degree_);
  if (factor == 0) return out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * factor);
  return out;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.degree_ != degree_) {
    throw std::invalid_argument("adding chains of different degrees");
  }
  for (const auto& [s, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(s, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Integer a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << to_string(s);
  }
  return os.str();
}

}  // namespace simvol::l1
