#pragma once

// Unlimited register machine (Cutland). Registers are numbered from 1, the
// input is placed in R1 and the output is read from R1. Jump targets are
// 1-based; a target past the last instruction halts.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simvol/exact/rational.hpp"

namespace simvol::urm {

using Natural = std::uint64_t;
using Register = std::uint32_t;

struct Zero {
  Register reg;
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct Succ {
  Register reg;
  friend bool operator==(const Succ&, const Succ&) = default;
};
struct Transfer {
  Register from;
  Register to;
  friend bool operator==(const Transfer&, const Transfer&) = default;
};
struct Jump {
  Register lhs;
  Register rhs;
  std::uint32_t target;
  friend bool operator==(const Jump&, const Jump&) = default;
};

using Instruction = std::variant<Zero, Succ, Transfer, Jump>;

class Program {
 public:
  // Throws std::invalid_argument if empty or if a register/target is 0.
  explicit Program(std::vector<Instruction> instructions);

  // One instruction per line: "Z r", "S r", "T r1 r2", "J r1 r2 q".
  // Blank lines and '#' comments are ignored.
  static Program parse(std::string_view text);
  std::string to_text() const;

  const std::vector<Instruction>& instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::vector<Instruction> instructions_;
};

struct Halted {
  Natural output;
  std::uint64_t steps;
};
struct OutOfFuel {};
using RunResult = std::variant<Halted, OutOfFuel>;

// At most `fuel` instructions are executed.
RunResult run(const Program& program, Natural input, std::uint64_t fuel);

// Goedel numbering by iterated Cantor pairing:
//   Z(r)       -> 4(r-1)
//   S(r)       -> 4(r-1) + 1
//   T(a,b)     -> 4 pi(a-1, b-1) + 2
//   J(a,b,q)   -> 4 pi(pi(a-1, b-1), q-1) + 3
//   [c1..ck]   -> pi(k-1, c1)                      for k = 1
//                 pi(k-1, pi(c1, pi(c2, ... ck)))   for k > 1
// with pi(x, y) = (x+y)(x+y+1)/2 + y. Every natural decodes; codes whose
// registers or targets do not fit in 32 bits (or whose length exceeds
// kMaxDecodedLength) decode to the canonical program [Z 1], which is also
// decode(0).
exact::Integer godel_index(const Program& program);
Program decode(const exact::Integer& index);

inline constexpr std::size_t kMaxDecodedLength = 1u << 16;

exact::Integer cantor_pair(const exact::Integer& x, const exact::Integer& y);
std::pair<exact::Integer, exact::Integer> cantor_unpair(const exact::Integer& z);

// 64-bit variants for the dovetail schedule.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

}  // namespace simvol::urm
