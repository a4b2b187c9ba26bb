#pragma once

// Enumeration of combinatorial singular chains, the semi-decider for
// ||m [T]||_1 <= n, and the upper-bound stream for ||T||.
//
// Canonical order (frozen): domain depth r, then target depth s, then the
// l1-norm k = 0, 1, ..., n, then chains as sequences of terms with strictly
// increasing vertex maps, compared term by term on (coefficient rank, vertex
// map), where the coefficient ranks are +1, -1, +2, -2, ... and vertex maps
// compare lexicographically on target vertex indices.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "simvol/exact/rational.hpp"
#include "simvol/l1/complex.hpp"
#include "simvol/l1/witness.hpp"
#include "simvol/reals/stream.hpp"

namespace simvol::l1 {

struct Budget {
  int r_max = 0;
  int s_max = 0;
  std::size_t max_terms = 0;             // 0: no cap beyond n
  std::uint64_t node_limit = 20'000'000;  // vertex assignments per search shard
};

enum class SemiDecisionKind { Certified, Exhausted };

struct SemiDecision {
  SemiDecisionKind kind = SemiDecisionKind::Exhausted;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
  bool node_limit_hit = false;
};

const char* to_string(SemiDecisionKind kind);

// Calls visit on every chain of norm <= n within the depth budget, in canonical
// order, until it returns false. Only simpliciality is enforced.
void enumerate_combinatorial_chains(const SimplicialComplex& complex, long n, const Budget& budget,
                                    const std::function<bool(const std::vector<WitnessTerm>&)>& visit);

// Caches the fundamental cycle, subdivisions and search geometry of one
// complex across searches.
class SearchContext {
 public:
  explicit SearchContext(const SimplicialComplex& complex);
  ~SearchContext();
  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  const SimplicialComplex& complex() const;
  const Chain& fundamental_cycle() const;

  // Search at exactly the depths (r, s). The result is independent of the
  // thread count: the search is split into fixed shards and the earliest
  // shard holding a witness wins.
  SemiDecision search(long m, long n, int r, int s, std::uint64_t node_limit, std::size_t max_terms = 0,
                      unsigned threads = 1);

  // Enumerate mode at exactly (r, s); returns false if the visitor stopped.
  bool enumerate(long n, int r, int s, std::size_t max_terms,
                 const std::function<bool(const std::vector<WitnessTerm>&)>& visit);

  // The fundamental cycle as a depth-(0, 0) witness.
  Witness fundamental_witness() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// First verified witness in canonical order, or Exhausted. Exhausted means the
// budget ran out, never that the norm exceeds n.
SemiDecision semi_decide(const SimplicialComplex& complex, long m, long n, const Budget& budget,
                         unsigned threads = 1);

struct StreamSchedule {
  int max_r = -1;  // -1: 6 for d = 1, 1 otherwise
  int max_s = -1;  // -1: 2 for d = 1, 1 otherwise
  std::uint64_t node_limit = 2'000'000;
  unsigned threads = 1;
};

struct StreamCell {
  long m = 1;
  int r = 0;
  int s = 0;
};

struct StreamEvent {
  std::uint64_t index = 0;  // 0 is the seed, cells count from 1
  bool seed = false;
  StreamCell cell;
  long n = -1;  // norm bound searched for; -1 if the cell was skipped
  std::optional<exact::Rational> bound;
  std::optional<Witness> witness;
  bool node_limit_hit = false;
};

// Cells (m, r, s) with m >= 1 are visited by level m + r + s and then
// lexicographically, omitting r > max_r or s > max_s. A cell searches for a
// witness of norm n = ceil(best * m) - 1 at exactly (r, s) and emits
// norm / m when it finds one. The first step emits ||z||_1.
class SimvolStream final : public reals::BoundSource {
 public:
  explicit SimvolStream(const SimplicialComplex& complex, StreamSchedule schedule = {});

  std::optional<exact::Rational> step() override;

  const StreamEvent& last_event() const { return last_; }
  const std::optional<exact::Rational>& best() const { return best_; }
  const StreamSchedule& schedule() const { return schedule_; }
  const std::vector<Witness>& certificates() const { return certificates_; }

 private:
  StreamCell next_cell();

  std::shared_ptr<SearchContext> context_;
  StreamSchedule schedule_;
  StreamEvent last_;
  std::optional<exact::Rational> best_;
  std::vector<Witness> certificates_;
  std::uint64_t index_ = 0;
  long level_ = 1;
  long m_ = 1;
  long r_ = 0;
};

reals::UpperBoundStream simvol_stream(const SimplicialComplex& complex, StreamSchedule schedule = {});

}  // namespace simvol::l1
