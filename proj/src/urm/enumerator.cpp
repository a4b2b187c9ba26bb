#include "simvol/urm/enumerator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace simvol::urm {

ReSetEnumerator ReSetEnumerator::halting_set() { return {Kind::HaltingSet, "halting"}; }

ReSetEnumerator ReSetEnumerator::program_domain(Program program) {
  ReSetEnumerator e(Kind::ProgramDomain, "program");
  e.program_ = std::make_shared<const Program>(std::move(program));
  return e;
}

ReSetEnumerator ReSetEnumerator::recursive(std::string name, std::function<bool(Natural)> rule) {
  ReSetEnumerator e(Kind::Recursive, std::move(name));
  e.rule_ = std::move(rule);
  return e;
}

std::uint64_t ReSetEnumerator::fuel_for_cell(std::uint64_t cell) {
  // 2^k, but never more than the number of cells visited so far: a looping
  // program at (0, 60) would otherwise stall the whole schedule.
  const auto k = std::min<std::uint64_t>(cantor_unpair(cell).second, 62);
  return std::min(std::uint64_t{1} << k, cell + 1);
}

std::optional<Natural> ReSetEnumerator::visit(std::uint64_t cell) const {
  switch (kind_) {
    case Kind::Recursive:
      return rule_(cell) ? std::optional<Natural>(cell) : std::nullopt;
    case Kind::HaltingSet: {
      const Natural n = cantor_unpair(cell).first;
      const Program p = decode(exact::Integer(static_cast<unsigned long>(n)));
      if (std::holds_alternative<Halted>(run(p, n, fuel_for_cell(cell)))) {
        return n;
      }
      return std::nullopt;
    }
    case Kind::ProgramDomain: {
      const Natural n = cantor_unpair(cell).first;
      if (std::holds_alternative<Halted>(run(*program_, n, fuel_for_cell(cell)))) {
        return n;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Natural> ReSetEnumerator::enumerate(std::uint64_t budget, unsigned threads) const {
  threads = std::max(1u, threads);
  std::vector<std::vector<Natural>> partial(threads);
  auto worker = [&](unsigned w) {
    for (std::uint64_t cell = w; cell < budget; cell += threads) {
      if (auto n = visit(cell)) {
        partial[w].push_back(*n);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(worker, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::vector<Natural> out;
  for (const auto& p : partial) {
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Natural> ReSetEnumerator::Cursor::step() {
  const auto n = set_.visit(next_cell_++);
  if (!n) {
    return std::nullopt;
  }
  const auto it = std::lower_bound(found_.begin(), found_.end(), *n);
  if (it != found_.end() && *it == *n) {
    return std::nullopt;
  }
  found_.insert(it, *n);
  return n;
}

ReSetEnumerator named_set(const std::string& name) {
  if (name == "evens") {
    return ReSetEnumerator::recursive(name, [](Natural n) { return n % 2 == 0; });
  }
  if (name == "odds") {
    return ReSetEnumerator::recursive(name, [](Natural n) { return n % 2 == 1; });
  }
  if (name == "empty") {
    return ReSetEnumerator::recursive(name, [](Natural) { return false; });
  }
  if (name == "all") {
    return ReSetEnumerator::recursive(name, [](Natural) { return true; });
  }
  if (name == "squares") {
    return ReSetEnumerator::recursive(name, [](Natural n) {
      auto r = static_cast<Natural>(std::sqrt(static_cast<double>(n)));
      while (r * r > n) --r;
      while ((r + 1) * (r + 1) <= n) ++r;
      return r * r == n;
    });
  }
  if (name == "halting") {
    return ReSetEnumerator::halting_set();
  }
  throw std::invalid_argument("unknown set: " + name);
}

}  // namespace simvol::urm
