#include "simvol/urm/program.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <optional>
#include <stdexcept>

namespace simvol::urm {

using exact::Integer;

Program::Program(std::vector<Instruction> instructions) : instructions_(std::move(instructions)) {
  if (instructions_.empty()) {
    throw std::invalid_argument("URM program must contain at least one instruction");
  }
  for (const auto& ins : instructions_) {
    const bool ok = std::visit(
        [](const auto& i) {
          using T = std::decay_t<decltype(i)>;
          if constexpr (std::is_same_v<T, Zero> || std::is_same_v<T, Succ>) {
            return i.reg >= 1;
          } else if constexpr (std::is_same_v<T, Transfer>) {
            return i.from >= 1 && i.to >= 1;
          } else {
            return i.lhs >= 1 && i.rhs >= 1 && i.target >= 1;
          }
        },
        ins);
    if (!ok) {
      throw std::invalid_argument("URM registers and jump targets are 1-based");
    }
  }
}

Program Program::parse(std::string_view text) {
  std::vector<Instruction> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto number = [&](std::istringstream& ls) -> std::uint32_t {
    long long v = -1;
    if (!(ls >> v) || v < 1 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected a positive operand");
    }
    return static_cast<std::uint32_t>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) {
      continue;
    }
    if (op == "Z") {
      out.emplace_back(Zero{number(ls)});
    } else if (op == "S") {
      out.emplace_back(Succ{number(ls)});
    } else if (op == "T") {
      const auto a = number(ls);
      out.emplace_back(Transfer{a, number(ls)});
    } else if (op == "J") {
      const auto a = number(ls);
      const auto b = number(ls);
      out.emplace_back(Jump{a, b, number(ls)});
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown instruction " + op);
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing operand");
    }
  }
  return Program(std::move(out));
}

std::string Program::to_text() const {
  std::ostringstream os;
  for (const auto& ins : instructions_) {
    std::visit(
        [&](const auto& i) {
          using T = std::decay_t<decltype(i)>;
          if constexpr (std::is_same_v<T, Zero>) {
            os << "Z " << i.reg;
          } else if constexpr (std::is_same_v<T, Succ>) {
            os << "S " << i.reg;
          } else if constexpr (std::is_same_v<T, Transfer>) {
            os << "T " << i.from << ' ' << i.to;
          } else {
            os << "J " << i.lhs << ' ' << i.rhs << ' ' << i.target;
          }
        },
        ins);
    os << '\n';
  }
  return os.str();
}

RunResult run(const Program& program, Natural input, std::uint64_t fuel) {
  // Registers touched by the program are compacted into a dense vector.
  std::vector<Register> used{1};
  for (const auto& ins : program.instructions()) {
    std::visit(
        [&](const auto& i) {
          using T = std::decay_t<decltype(i)>;
          if constexpr (std::is_same_v<T, Zero> || std::is_same_v<T, Succ>) {
            used.push_back(i.reg);
          } else if constexpr (std::is_same_v<T, Transfer>) {
            used.push_back(i.from);
            used.push_back(i.to);
          } else {
            used.push_back(i.lhs);
            used.push_back(i.rhs);
          }
        },
        ins);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  auto slot = [&](Register r) {
    return static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
  };

  struct Compiled {
    int kind;
    std::size_t a;
    std::size_t b;
    std::uint64_t target;
  };
  std::vector<Compiled> code;
  code.reserve(program.size());
  for (const auto& ins : program.instructions()) {
    code.push_back(std::visit(
        [&](const auto& i) -> Compiled {
          using T = std::decay_t<decltype(i)>;
          if constexpr (std::is_same_v<T, Zero>) {
            return {0, slot(i.reg), 0, 0};
          } else if constexpr (std::is_same_v<T, Succ>) {
            return {1, slot(i.reg), 0, 0};
          } else if constexpr (std::is_same_v<T, Transfer>) {
            return {2, slot(i.from), slot(i.to), 0};
          } else {
            return {3, slot(i.lhs), slot(i.rhs), i.target};
          }
        },
        ins));
  }

  std::vector<Natural> regs(used.size(), 0);
  regs[0] = input;
  std::uint64_t pc = 1;
  std::uint64_t steps = 0;
  while (true) {
    if (pc > code.size()) {
      return Halted{regs[0], steps};
    }
    if (steps == fuel) {
      return OutOfFuel{};
    }
    const Compiled& c = code[pc - 1];
    ++steps;
    switch (c.kind) {
      case 0:
        regs[c.a] = 0;
        ++pc;
        break;
      case 1:
        ++regs[c.a];
        ++pc;
        break;
      case 2:
        regs[c.b] = regs[c.a];
        ++pc;
        break;
      default:
        pc = regs[c.a] == regs[c.b] ? c.target : pc + 1;
        break;
    }
  }
}

Integer cantor_pair(const Integer& x, const Integer& y) {
  const Integer s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Integer, Integer> cantor_unpair(const Integer& z) {
  // w = floor((sqrt(8z + 1) - 1) / 2)
  Integer root;
  const Integer disc = 8 * z + 1;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  const Integer w = (root - 1) / 2;
  const Integer t = w * (w + 1) / 2;
  const Integer y = z - t;
  return {w - y, y};
}

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > z) {
    --w;
  }
  while ((w + 1) * (w + 2) / 2 <= z) {
    ++w;
  }
  const std::uint64_t y = z - w * (w + 1) / 2;
  return {w - y, y};
}

namespace {

Integer instruction_code(const Instruction& ins) {
  return std::visit(
      [](const auto& i) -> Integer {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return 4 * Integer(i.reg - 1);
        } else if constexpr (std::is_same_v<T, Succ>) {
          return 4 * Integer(i.reg - 1) + 1;
        } else if constexpr (std::is_same_v<T, Transfer>) {
          return 4 * cantor_pair(Integer(i.from - 1), Integer(i.to - 1)) + 2;
        } else {
          return 4 * cantor_pair(cantor_pair(Integer(i.lhs - 1), Integer(i.rhs - 1)),
                                 Integer(i.target - 1)) +
                 3;
        }
      },
      ins);
}

bool fits_u32(const Integer& v) { return v >= 0 && v < Integer("4294967295"); }

std::optional<Instruction> decode_instruction(const Integer& code) {
  const unsigned long tag = mpz_fdiv_ui(code.get_mpz_t(), 4);
  const Integer body = code / 4;
  auto as_index = [](const Integer& v) { return static_cast<std::uint32_t>(v.get_ui() + 1); };
  switch (tag) {
    case 0:
      if (!fits_u32(body)) return std::nullopt;
      return Zero{as_index(body)};
    case 1:
      if (!fits_u32(body)) return std::nullopt;
      return Succ{as_index(body)};
    case 2: {
      const auto [a, b] = cantor_unpair(body);
      if (!fits_u32(a) || !fits_u32(b)) return std::nullopt;
      return Transfer{as_index(a), as_index(b)};
    }
    default: {
      const auto [ab, q] = cantor_unpair(body);
      const auto [a, b] = cantor_unpair(ab);
      if (!fits_u32(a) || !fits_u32(b) || !fits_u32(q)) return std::nullopt;
      return Jump{as_index(a), as_index(b), as_index(q)};
    }
  }
}

}  // namespace

Integer godel_index(const Program& program) {
  const auto& ins = program.instructions();
  Integer tuple = instruction_code(ins.back());
  for (std::size_t i = ins.size() - 1; i-- > 0;) {
    tuple = cantor_pair(instruction_code(ins[i]), tuple);
  }
  return cantor_pair(Integer(static_cast<unsigned long>(ins.size() - 1)), tuple);
}

Program decode(const Integer& index) {
  const Program canonical({Zero{1}});
  if (index < 0) {
    return canonical;
  }
  const auto [len_minus_one, tuple] = cantor_unpair(index);
  if (len_minus_one >= kMaxDecodedLength) {
    return canonical;
  }
  const std::size_t length = len_minus_one.get_ui() + 1;
  std::vector<Instruction> out;
  out.reserve(length);
  Integer rest = tuple;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    auto [head, tail] = cantor_unpair(rest);
    const auto ins = decode_instruction(head);
    if (!ins) {
      return canonical;
    }
    out.push_back(*ins);
    rest = tail;
  }
  const auto last = decode_instruction(rest);
  if (!last) {
    return canonical;
  }
  out.push_back(*last);
  return Program(std::move(out));
}

}  // namespace simvol::urm
