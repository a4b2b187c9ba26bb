#include "simvol/l1/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "simvol/l1/homology.hpp"
#include "simvol/l1/subdivision.hpp"

namespace simvol::l1 {

namespace {

using Key = std::uint64_t;
using Map = std::vector<std::uint32_t>;

constexpr std::size_t kMaxTargetVertices = 65535;

// Sorted index tuples of at most four vertices, 16 bits each.
Key encode(const std::uint32_t* v, std::size_t n) {
  Key k = 0;
  for (std::size_t i = 0; i < n; ++i) k = (k << 16) | (v[i] + 1);
  return k;
}

// Everything the search needs about one (r, s) pair, in target vertex
// indices 0 .. nk-1 rather than labels.
struct Geometry {
  int d = 0;
  int r = 0;
  int s = 0;
  const StandardSubdivision* domain = nullptr;
  std::size_t nv = 0;
  std::size_t domain_tops = 0;
  std::vector<std::vector<std::uint32_t>> back_edges;
  std::vector<std::vector<std::size_t>> back_tops;
  std::vector<std::size_t> tops_done;

  std::size_t nk = 0;
  std::vector<Vertex> label;
  std::vector<std::uint32_t> all_vertices;
  std::vector<std::vector<std::uint32_t>> candidates;  // self and neighbours, sorted
  std::vector<std::uint8_t> adjacent;
  std::unordered_set<Key> simplices;
  std::unordered_map<Key, std::size_t> top_index;
  std::size_t target_tops = 0;
  std::vector<long> unit_target;  // Sd^s_*(z)
};

struct Term {
  long coefficient;
  Map map;
};

std::vector<WitnessTerm> to_witness_terms(const Geometry& g, const std::vector<Term>& terms) {
  std::vector<WitnessTerm> out;
  for (const auto& t : terms) {
    CombinatorialSimplex cs{g.r, g.s, {}};
    for (auto x : t.map) cs.vertex_map.push_back(g.label[x]);
    out.push_back({t.coefficient, std::move(cs)});
  }
  return out;
}

class Engine {
 public:
  // target == nullptr: enumerate mode, only simpliciality is enforced.
  Engine(const Geometry& g, const std::vector<long>* target, long k, std::size_t max_terms,
         std::uint64_t node_limit, std::function<bool(const std::vector<Term>&)> on_leaf)
      : g_(g),
        target_(target),
        k_(k),
        max_terms_(max_terms),
        node_limit_(node_limit),
        on_leaf_(std::move(on_leaf)),
        f_(g.nv) {
    if (target_) {
      partial_.assign(g.target_tops, 0);
      for (long t : *target_) dist_ += std::labs(t);
    }
  }

  void restrict_first(long coefficient, std::uint32_t first_vertex) {
    first_coef_ = coefficient;
    first_vertex_ = first_vertex;
  }

  void run() {
    if (target_ && dist_ > k_ * static_cast<long>(g_.domain_tops)) return;
    next_term();
  }

  std::uint64_t nodes() const { return nodes_; }
  bool limit_hit() const { return limit_hit_; }
  bool stopped() const { return stop_; }

 private:
  void next_term() {
    if (stop_) return;
    if (used_ == k_) {
      leaf();
      return;
    }
    if (max_terms_ != 0 && terms_.size() >= max_terms_) return;
    const long remaining = k_ - used_;
    for (long a = 1; a <= remaining && !stop_; ++a) {
      for (long c : {a, -a}) {
        if (stop_) return;
        if (terms_.empty() && first_coef_ && c != *first_coef_) continue;
        // Even d: the coefficients of a singular cycle sum to zero.
        if (target_ && g_.d % 2 == 0 && std::labs(csum_ + c) > remaining - a) continue;
        coef_ = c;
        rest_ = remaining - a;
        assign(0, !terms_.empty());
      }
    }
  }

  void assign(std::size_t v, bool tight) {
    if (v == g_.nv) {
      if (!tight) complete_term();
      return;
    }
    const auto& cands = g_.back_edges[v].empty() ? g_.all_vertices : g_.candidates[f_[g_.back_edges[v][0]]];
    const std::uint32_t floor = tight ? terms_.back().map[v] : 0;
    for (std::uint32_t x : cands) {
      if (stop_) return;
      if (x < floor) continue;
      if (terms_.empty() && v == 0 && first_vertex_ && x != *first_vertex_) continue;
      if (++nodes_ > node_limit_) {
        limit_hit_ = true;
        stop_ = true;
        return;
      }
      f_[v] = x;
      bool ok = true;
      for (auto u : g_.back_edges[v]) {
        if (!g_.adjacent[f_[u] * g_.nk + x]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t mark = changes_.size();
      for (std::size_t t : g_.back_tops[v]) {
        if (!apply_top(t)) {
          ok = false;
          break;
        }
      }
      if (ok && target_) {
        const long capacity = std::labs(coef_) * static_cast<long>(g_.domain_tops - g_.tops_done[v]) +
                              rest_ * static_cast<long>(g_.domain_tops);
        ok = dist_ <= capacity;
      }
      if (ok) assign(v + 1, tight && x == floor);
      undo(mark);
    }
  }

  // Checks that top simplex t of the domain maps onto a target simplex and,
  // in target mode, adds its signed image to the partial push-forward.
  bool apply_top(std::size_t t) {
    const Simplex& top = g_.domain->top[t];
    std::uint32_t img[4];
    const std::size_t n = top.size();
    for (std::size_t i = 0; i < n; ++i) img[i] = f_[top[i]];
    int sign = 1;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
        std::swap(img[j - 1], img[j]);
        sign = -sign;
      }
    }
    std::size_t m = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (img[i] != img[m - 1]) img[m++] = img[i];
    }
    if (!g_.simplices.count(encode(img, m))) return false;
    if (m == n && target_) {
      const std::size_t idx = g_.top_index.at(encode(img, m));
      const long delta = coef_ * sign * g_.domain->top_sign[t];
      add_partial(idx, delta);
      changes_.emplace_back(idx, delta);
    }
    return true;
  }

  void add_partial(std::size_t idx, long delta) {
    dist_ -= std::labs((*target_)[idx] - partial_[idx]);
    partial_[idx] += delta;
    dist_ += std::labs((*target_)[idx] - partial_[idx]);
  }

  void undo(std::size_t mark) {
    while (changes_.size() > mark) {
      add_partial(changes_.back().first, -changes_.back().second);
      changes_.pop_back();
    }
  }

  void complete_term() {
    const long c = coef_;
    const long rest = rest_;
    terms_.push_back({c, f_});
    used_ += std::labs(c);
    csum_ += c;
    next_term();
    csum_ -= c;
    used_ -= std::labs(c);
    f_ = std::move(terms_.back().map);  // later terms reuse f_
    terms_.pop_back();
    coef_ = c;
    rest_ = rest;
  }

  bool singular_cycle() const {
    std::map<Map, long> faces;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < g_.domain->face_inclusion.size(); ++i) {
        Map face;
        for (Vertex v : g_.domain->face_inclusion[i]) face.push_back(t.map[v]);
        long& c = faces[face];
        c += i % 2 == 0 ? t.coefficient : -t.coefficient;
        if (c == 0) faces.erase(face);
      }
    }
    return faces.empty();
  }

  void leaf() {
    if (target_) {
      if (dist_ != 0) return;
      if (g_.d % 2 == 0 && csum_ != 0) return;
      if (!singular_cycle()) return;
    }
    if (on_leaf_(terms_)) stop_ = true;
  }

  const Geometry& g_;
  const std::vector<long>* target_;
  long k_;
  std::size_t max_terms_;
  std::uint64_t node_limit_;
  std::function<bool(const std::vector<Term>&)> on_leaf_;

  Map f_;
  std::vector<Term> terms_;
  std::vector<long> partial_;
  std::vector<std::pair<std::size_t, long>> changes_;
  long dist_ = 0;
  long used_ = 0;
  long csum_ = 0;
  long coef_ = 0;
  long rest_ = 0;
  std::optional<long> first_coef_;
  std::optional<std::uint32_t> first_vertex_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
  bool stop_ = false;
};

}  // namespace

const char* to_string(SemiDecisionKind kind) {
  return kind == SemiDecisionKind::Certified ? "Certified" : "Exhausted";
}

struct SearchContext::Impl {
  SimplicialComplex complex;
  Chain z;
  std::unique_ptr<IteratedSubdivision> tower;
  std::map<int, std::unique_ptr<StandardSubdivision>> domains;
  std::map<std::pair<int, int>, std::unique_ptr<Geometry>> geometry;
  std::mutex mutex;

  const IteratedSubdivision& tower_for(int s) {
    if (!tower || tower->times() < s) tower = std::make_unique<IteratedSubdivision>(complex, s);
    return *tower;
  }

  const Geometry& geometry_for(int r, int s) {
    std::lock_guard lock(mutex);
    auto& slot = geometry[{r, s}];
    if (slot) return *slot;
    auto& dom = domains[r];
    if (!dom) dom = std::make_unique<StandardSubdivision>(standard_subdivision(complex.dimension(), r));
    const IteratedSubdivision& tw = tower_for(s);
    const SimplicialComplex& target = tw.complex(s);

    auto g = std::make_unique<Geometry>();
    g->d = complex.dimension();
    g->r = r;
    g->s = s;
    g->domain = dom.get();
    g->nv = dom->vertex_count();
    g->domain_tops = dom->top.size();
    g->back_edges.resize(g->nv);
    for (const auto& [a, b] : dom->edges) g->back_edges[b].push_back(a);
    for (auto& e : g->back_edges) std::sort(e.begin(), e.end());
    g->back_tops.resize(g->nv);
    for (std::size_t t = 0; t < dom->top.size(); ++t) g->back_tops[dom->top[t].back()].push_back(t);
    std::size_t done = 0;
    for (std::size_t v = 0; v < g->nv; ++v) {
      done += g->back_tops[v].size();
      g->tops_done.push_back(done);
    }

    const auto& verts = target.simplices(0);
    g->nk = verts.size();
    if (g->nk > kMaxTargetVertices || g->d > 3) {
      throw std::invalid_argument("target complex too large for the search");
    }
    std::unordered_map<Vertex, std::uint32_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      g->label.push_back(verts[i][0]);
      g->all_vertices.push_back(static_cast<std::uint32_t>(i));
      index.emplace(verts[i][0], static_cast<std::uint32_t>(i));
    }
    g->adjacent.assign(g->nk * g->nk, 0);
    g->candidates.resize(g->nk);
    for (std::uint32_t i = 0; i < g->nk; ++i) {
      g->adjacent[i * g->nk + i] = 1;
      g->candidates[i].push_back(i);
    }
    for (const auto& e : target.simplices(1)) {
      const auto a = index.at(e[0]);
      const auto b = index.at(e[1]);
      g->adjacent[a * g->nk + b] = g->adjacent[b * g->nk + a] = 1;
      g->candidates[a].push_back(b);
      g->candidates[b].push_back(a);
    }
    for (auto& c : g->candidates) std::sort(c.begin(), c.end());
    for (int k = 0; k <= g->d; ++k) {
      for (const auto& s2 : target.simplices(k)) {
        std::uint32_t idx[4];
        for (std::size_t i = 0; i < s2.size(); ++i) idx[i] = index.at(s2[i]);
        g->simplices.insert(encode(idx, s2.size()));
        if (k == g->d) g->top_index.emplace(encode(idx, s2.size()), g->top_index.size());
      }
    }
    g->target_tops = g->top_index.size();
    g->unit_target.assign(g->target_tops, 0);
    const Chain pushed = tw.push(z, 0, s);
    for (const auto& [simplex, c] : pushed.terms()) {
      std::uint32_t idx[4];
      for (std::size_t i = 0; i < simplex.size(); ++i) idx[i] = index.at(simplex[i]);
      g->unit_target[g->top_index.at(encode(idx, simplex.size()))] = c.get_si();
    }
    slot = std::move(g);
    return *slot;
  }
};

SearchContext::SearchContext(const SimplicialComplex& complex) : impl_(std::make_unique<Impl>()) {
  impl_->complex = complex;
  impl_->z = l1::fundamental_cycle(complex);
}

SearchContext::~SearchContext() = default;

const SimplicialComplex& SearchContext::complex() const { return impl_->complex; }
const Chain& SearchContext::fundamental_cycle() const { return impl_->z; }

Witness SearchContext::fundamental_witness() const {
  Witness w{1, static_cast<long>(impl_->z.norm().get_si()), {}};
  for (const auto& [s, c] : impl_->z.terms()) {
    w.terms.push_back({c.get_si(), CombinatorialSimplex{0, 0, s}});
  }
  return w;
}

SemiDecision SearchContext::search(long m, long n, int r, int s, std::uint64_t node_limit, std::size_t max_terms,
                                   unsigned threads) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (r < 0 || s < 0) throw std::invalid_argument("subdivision depths must be >= 0");
  SemiDecision out;
  if (n < 0) return out;
  const Geometry& g = impl_->geometry_for(r, s);
  std::vector<long> target = g.unit_target;
  for (auto& t : target) t *= m;

  for (long k = 0; k <= n; ++k) {
    // Shards: (first coefficient in rank order, first vertex), in DFS order.
    std::vector<std::pair<long, std::uint32_t>> shards;
    if (k == 0) {
      shards.emplace_back(0, 0);
    } else {
      for (long a = 1; a <= k; ++a) {
        for (long c : {a, -a}) {
          for (std::uint32_t x = 0; x < g.nk; ++x) shards.emplace_back(c, x);
        }
      }
    }
    struct ShardResult {
      std::optional<Witness> witness;
      std::uint64_t nodes = 0;
      bool limit_hit = false;
    };
    std::vector<ShardResult> results(shards.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{shards.size()};

    auto run_shard = [&](std::size_t i) {
      ShardResult& res = results[i];
      Engine engine(g, &target, k, max_terms, node_limit, [&](const std::vector<Term>& terms) {
        Witness w{m, n, to_witness_terms(g, terms)};
        if (!verify_witness(impl_->complex, w)) return false;
        res.witness = std::move(w);
        return true;
      });
      if (k > 0) engine.restrict_first(shards[i].first, shards[i].second);
      engine.run();
      res.nodes = engine.nodes();
      res.limit_hit = engine.limit_hit();
      if (res.witness) {
        std::size_t cur = winner.load();
        while (i < cur && !winner.compare_exchange_weak(cur, i)) {
        }
      }
    };
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= shards.size()) return;
        if (i > winner.load()) continue;
        run_shard(i);
      }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards.size())));
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    const std::size_t win = winner.load();
    const std::size_t last = std::min(win, shards.size() - 1);
    for (std::size_t i = 0; i <= last; ++i) {
      out.nodes += results[i].nodes;
      out.node_limit_hit = out.node_limit_hit || results[i].limit_hit;
    }
    if (win < shards.size()) {
      out.kind = SemiDecisionKind::Certified;
      out.witness = std::move(results[win].witness);
      return out;
    }
  }
  return out;
}

bool SearchContext::enumerate(long n, int r, int s, std::size_t max_terms,
                              const std::function<bool(const std::vector<WitnessTerm>&)>& visit) {
  const Geometry& g = impl_->geometry_for(r, s);
  for (long k = 0; k <= n; ++k) {
    Engine engine(g, nullptr, k, max_terms, UINT64_MAX,
                  [&](const std::vector<Term>& terms) { return !visit(to_witness_terms(g, terms)); });
    engine.run();
    if (engine.stopped()) return false;
  }
  return true;
}

void enumerate_combinatorial_chains(const SimplicialComplex& complex, long n, const Budget& budget,
                                    const std::function<bool(const std::vector<WitnessTerm>&)>& visit) {
  SearchContext ctx(complex);
  for (int r = 0; r <= budget.r_max; ++r) {
    for (int s = 0; s <= budget.s_max; ++s) {
      if (!ctx.enumerate(n, r, s, budget.max_terms, visit)) return;
    }
  }
}

SemiDecision semi_decide(const SimplicialComplex& complex, long m, long n, const Budget& budget, unsigned threads) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  SearchContext ctx(complex);
  SemiDecision total;
  for (int r = 0; r <= budget.r_max; ++r) {
    for (int s = 0; s <= budget.s_max; ++s) {
      SemiDecision d = ctx.search(m, n, r, s, budget.node_limit, budget.max_terms, threads);
      total.nodes += d.nodes;
      total.node_limit_hit = total.node_limit_hit || d.node_limit_hit;
      if (d.kind == SemiDecisionKind::Certified) {
        total.kind = d.kind;
        total.witness = std::move(d.witness);
        return total;
      }
    }
  }
  return total;
}

SimvolStream::SimvolStream(const SimplicialComplex& complex, StreamSchedule schedule)
    : context_(std::make_shared<SearchContext>(complex)), schedule_(schedule) {
  const int d = complex.dimension();
  if (schedule_.max_r < 0) schedule_.max_r = d == 1 ? 6 : 1;
  if (schedule_.max_s < 0) schedule_.max_s = d == 1 ? 2 : 1;
}

StreamCell SimvolStream::next_cell() {
  for (;;) {
    const long s = level_ - m_ - r_;
    StreamCell cell{m_, static_cast<int>(r_), static_cast<int>(s)};
    // advance (level, m, r) lexicographically
    if (r_ < level_ - m_) {
      ++r_;
    } else if (m_ < level_) {
      ++m_;
      r_ = 0;
    } else {
      ++level_;
      m_ = 1;
      r_ = 0;
    }
    if (cell.r <= schedule_.max_r && cell.s <= schedule_.max_s) return cell;
  }
}

std::optional<exact::Rational> SimvolStream::step() {
  last_ = StreamEvent{};
  last_.index = index_++;
  if (last_.index == 0) {
    Witness w = context_->fundamental_witness();
    last_.seed = true;
    last_.n = w.n;
    last_.bound = exact::Rational(w.n);
    last_.witness = w;
    certificates_.push_back(std::move(w));
    best_ = last_.bound;
    return last_.bound;
  }
  last_.cell = next_cell();
  const long m = last_.cell.m;
  const exact::Integer n = exact::ceil(*best_ * exact::Rational(m)) - 1;
  if (n < 0) return std::nullopt;
  last_.n = n.get_si();
  SemiDecision d =
      context_->search(m, last_.n, last_.cell.r, last_.cell.s, schedule_.node_limit, 0, schedule_.threads);
  last_.node_limit_hit = d.node_limit_hit;
  if (d.kind != SemiDecisionKind::Certified) return std::nullopt;
  last_.bound = exact::Rational(d.witness->norm()) / exact::Rational(m);
  last_.witness = d.witness;
  certificates_.push_back(*d.witness);
  if (*last_.bound < *best_) best_ = last_.bound;
  return last_.bound;
}

namespace {

class StreamSource final : public reals::BoundSource {
 public:
  explicit StreamSource(std::unique_ptr<SimvolStream> s) : s_(std::move(s)) {}
  std::optional<exact::Rational> step() override { return s_->step(); }

 private:
  std::unique_ptr<SimvolStream> s_;
};

}  // namespace

reals::UpperBoundStream simvol_stream(const SimplicialComplex& complex, StreamSchedule schedule) {
  return reals::UpperBoundStream(
      std::make_unique<StreamSource>(std::make_unique<SimvolStream>(complex, schedule)));
}

}  // namespace simvol::l1
