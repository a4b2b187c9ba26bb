#pragma once

// Enumerators of recursively enumerable subsets of N.
//
// Dovetail schedule (frozen): schedule cell t is the pair (n, k) with
// cantor_pair(n, k) = t, i.e. the diagonals n + k = 0, 1, 2, ... with k
// increasing along each diagonal. Visiting a cell runs the relevant program on
// input n with fuel min(2^k, t + 1). A budget of b visits cells 0 .. b-1, so
// no run ever gets more than b steps.
//
// Recursive sets use the identity schedule: cell t decides n = t.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simvol/urm/program.hpp"

namespace simvol::urm {

class ReSetEnumerator {
 public:
  enum class Kind { HaltingSet, ProgramDomain, Recursive };

  // {n | decode(n) halts on input n}.
  static ReSetEnumerator halting_set();
  // {n | program halts on input n}.
  static ReSetEnumerator program_domain(Program program);
  static ReSetEnumerator recursive(std::string name, std::function<bool(Natural)> rule);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // Elements discovered within the first `budget` schedule cells, sorted.
  // Cells are partitioned round-robin across `threads` workers and merged,
  // so the result does not depend on the thread count.
  std::vector<Natural> enumerate(std::uint64_t budget, unsigned threads = 1) const;

  // What visiting a single schedule cell discovers.
  std::optional<Natural> visit(std::uint64_t cell) const;

  // The fuel granted at schedule cell t (dovetailed kinds).
  static std::uint64_t fuel_for_cell(std::uint64_t cell);

  // Stateful single-owner cursor; step() visits the next cell and reports a
  // newly discovered element, if any.
  class Cursor;
  Cursor cursor() const;

 private:
  ReSetEnumerator(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::shared_ptr<const Program> program_;
  std::function<bool(Natural)> rule_;
};

class ReSetEnumerator::Cursor {
 public:
  explicit Cursor(ReSetEnumerator set) : set_(std::move(set)) {}
  std::optional<Natural> step();
  std::uint64_t cells_visited() const { return next_cell_; }
  const std::vector<Natural>& discovered() const { return found_; }

 private:
  ReSetEnumerator set_;
  std::uint64_t next_cell_ = 0;
  std::vector<Natural> found_;  // sorted
};


inline ReSetEnumerator::Cursor ReSetEnumerator::cursor() const { return Cursor(*this); }

// Named fixtures used by the CLI: "evens", "odds", "empty", "all", "squares",
// "halting". Throws std::invalid_argument for unknown names.
ReSetEnumerator named_set(const std::string& name);

}  // namespace simvol::urm
