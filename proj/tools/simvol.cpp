#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simvol/exact/dyadic.hpp"
#include "simvol/fields/relations.hpp"
#include "simvol/l1/homology.hpp"
#include "simvol/l1/io.hpp"
#include "simvol/l1/search.hpp"
#include "simvol/reals/operations.hpp"
#include "simvol/scl/rotation.hpp"
#include "simvol/urm/enumerator.hpp"

using namespace simvol;
using Out = nlohmann::ordered_json;

namespace {

void emit(const Out& j) { std::cout << j.dump() << '\n'; }

Out interval_json(const exact::DyadicInterval& x) {
  return Out{{"lo", x.lo().str()}, {"hi", x.hi().str()}, {"approx", x.midpoint_double()}};
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
  }
  return out;
}

struct Options {
  unsigned threads = 1;

  long n = 0;
  long bits = 64;
  long K = 1;
  std::string matrix;

  std::string primes;
  long bound = 3;
  long numeric_bits = 0;
  long coeff_bound = 10;

  std::string set = "evens";
  std::uint64_t budget = 20;

  std::string source = "specker";
  std::uint64_t steps = 32;

  std::string complex;
  int degree = 1;
  bool rationals = false;

  long m = 1;
  int rmax = 0;
  int smax = 0;
  std::size_t max_terms = 0;
  std::uint64_t node_limit = 20'000'000;
  std::string witness_out;

  std::uint64_t cells = 100;
  int max_r = -1;
  int max_s = -1;
  std::uint64_t stream_node_limit = 2'000'000;

  std::string witness;
};

Out header(const std::string& command, Out flags, const Options& o) {
  flags["threads"] = o.threads;
  return Out{{"config", Out{{"command", command}, {"flags", std::move(flags)}}}};
}

int run_alpha(const Options& o) {
  emit(header("alpha", {{"n", o.n}, {"bits", o.bits}}, o));
  const scl::AlphaValue a = scl::alpha(o.n, o.bits);
  Out j{{"n", o.n}};
  j.update(interval_json(a.enclosure));
  if (a.exact) j["exact"] = a.exact->str();
  j["cosine"] = scl::alpha_cosine(o.n).str();
  emit(j);
  return 0;
}

int run_scl(const Options& o) {
  emit(header("scl", {{"matrix", o.matrix}, {"bits", o.bits}}, o));
  std::vector<exact::Rational> e;
  std::stringstream ss(o.matrix);
  std::string item;
  while (std::getline(ss, item, ',')) e.push_back(exact::Rational::parse(item));
  if (e.size() != 4) throw std::invalid_argument("--matrix needs four entries a,b,c,d");
  const scl::Matrix2 g(e[0], e[1], e[2], e[3]);
  Out j{{"trace", g.trace().str()}};
  j["rot"] = interval_json(scl::rot_lift(g, o.bits));
  j.update(interval_json(scl::scl_lift(g, o.bits)));
  emit(j);
  return 0;
}

int run_simvol(const Options& o) {
  emit(header("simvol", {{"n", o.n}, {"K", o.K}, {"bits", o.bits}}, o));
  Out j{{"n", o.n}, {"K", o.K}};
  j.update(interval_json(scl::simvol_value(o.n, o.K, o.bits)));
  if (o.n == 0) j["exact"] = (exact::Rational(8) * exact::Rational(o.K)).str();
  j["scl_h"] = interval_json(scl::scl_h(o.n, o.K, o.bits));
  emit(j);
  return 0;
}

int run_independence(const Options& o) {
  Out flags{{"primes", o.primes}, {"bound", o.bound}};
  if (o.numeric_bits > 0) {
    flags["numeric_bits"] = o.numeric_bits;
    flags["coeff_bound"] = o.coeff_bound;
  }
  emit(header("independence", flags, o));
  const std::vector<long> primes = parse_list(o.primes);
  fields::mersenne_basis(primes);  // validates the prime list

  bool coprime = true;
  Out pairs = Out::array();
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      const auto g = fields::mersenne_gcd(primes[a], primes[b]);
      coprime = coprime && g == 1;
      pairs.push_back({primes[a], primes[b], g.get_str()});
    }
  }
  emit({{"claim", "mersenne_coprime"}, {"pass", coprime}, {"gcds", pairs}});

  bool q2 = true;
  Out zero_q2 = Out::array();
  for (long p : primes) {
    for (long n = 1; n <= std::max<long>(o.bound, 1); ++n) {
      const auto e = fields::power_expansion_check(p, n);
      if (!e.q2_nonzero) {
        q2 = false;
        zero_q2.push_back({p, n});
      }
    }
  }
  emit({{"claim", "power_expansion_q2_nonzero"}, {"pass", q2}, {"failures", zero_q2}});

  const auto relations = fields::relation_search_exact(primes, o.bound, o.threads);
  emit({{"claim", "no_exact_relation"}, {"pass", relations.empty()}, {"relations", relations}});

  const auto sub = fields::subfield_exclusion_check(primes, o.bound);
  emit({{"claim", "subfield_exclusion"},
        {"pass", sub.violations.empty()},
        {"tuples_checked", sub.tuples_checked},
        {"violations", sub.violations}});

  if (o.numeric_bits > 0) {
    const auto v = fields::relation_search_numeric_adaptive(primes, o.coeff_bound, o.numeric_bits);
    Out cands = Out::array();
    for (const auto& c : v.candidates) cands.push_back({{"coeffs", c.coeffs}, {"confirmed", c.confirmed}});
    emit({{"claim", "numeric_independence"},
          {"pass", v.kind == fields::NumericVerdictKind::NoRelationFound},
          {"verdict", fields::to_string(v.kind)},
          {"bits", v.bits},
          {"margin", v.margin.str()},
          {"margin_approx", v.margin.to_double()},
          {"combinations", v.combinations},
          {"candidates", cands}});
  }
  return 0;
}

int run_specker(const Options& o) {
  emit(header("specker", {{"set", o.set}, {"budget", o.budget}}, o));
  auto streams = reals::specker(urm::named_set(o.set));
  for (std::uint64_t k = 0; k < o.budget; ++k) {
    if (auto q = streams.lower.step()) emit({{"k", k}, {"bound", q->str()}, {"kind", "lower"}});
    if (auto q = streams.complement_upper.step()) emit({{"k", k}, {"bound", q->str()}, {"kind", "upper"}});
  }
  Out summary{{"set", o.set}};
  if (streams.lower.best()) summary["lower_best"] = streams.lower.best()->str();
  if (streams.complement_upper.best()) summary["complement_upper_best"] = streams.complement_upper.best()->str();
  emit(summary);
  return 0;
}

int run_stream(const Options& o) {
  Out flags{{"source", o.source}, {"steps", o.steps}};
  if (o.source == "specker" || o.source == "specker-complement") flags["set"] = o.set;
  if (o.source == "simvol") flags["complex"] = o.complex;
  emit(header("stream", flags, o));

  auto dump = [&](auto& stream, const char* kind) {
    for (std::uint64_t k = 0; k < o.steps; ++k) {
      if (auto q = stream.step()) emit({{"k", k}, {"bound", q->str()}, {"kind", kind}});
    }
  };
  if (o.source == "specker") {
    auto s = reals::specker(urm::named_set(o.set));
    dump(s.lower, "lower");
  } else if (o.source == "specker-complement") {
    auto s = reals::specker(urm::named_set(o.set));
    dump(s.complement_upper, "upper");
  } else if (o.source == "inf-ratio") {
    auto s = reals::inf_ratio(reals::profile_pairs([](std::uint64_t m) { return m + 1; }));
    dump(s, "upper");
  } else if (o.source == "simvol") {
    l1::StreamSchedule schedule;
    schedule.threads = o.threads;
    auto s = l1::simvol_stream(l1::load_complex(o.complex), schedule);
    dump(s, "upper");
  } else {
    throw std::invalid_argument("unknown stream source: " + o.source);
  }
  return 0;
}

int run_homology(const Options& o) {
  emit(header("homology", {{"complex", o.complex}, {"degree", o.degree}, {"rationals", o.rationals}}, o));
  const l1::SimplicialComplex k = l1::load_complex(o.complex);
  const auto h =
      l1::homology(k, o.degree, o.rationals ? l1::Coefficients::Rationals : l1::Coefficients::Integers);
  Out torsion = Out::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  emit({{"degree", o.degree}, {"group", h.str()}, {"betti", h.betti}, {"torsion", torsion}});
  return 0;
}

Out witness_terms(const l1::Witness& w) {
  Out terms = Out::array();
  for (const auto& t : w.terms) {
    terms.push_back(
        {{"coefficient", t.coefficient}, {"r", t.simplex.r}, {"s", t.simplex.s}, {"map", t.simplex.vertex_map}});
  }
  return terms;
}

int run_semi_decide(const Options& o) {
  Out flags{{"complex", o.complex}, {"m", o.m}, {"n", o.n}, {"rmax", o.rmax}, {"smax", o.smax},
            {"max_terms", o.max_terms}, {"node_limit", o.node_limit}};
  if (!o.witness_out.empty()) flags["out"] = o.witness_out;
  emit(header("l1 semi-decide", flags, o));
  const l1::SimplicialComplex k = l1::load_complex(o.complex);
  l1::Budget budget{o.rmax, o.smax, o.max_terms, o.node_limit};
  const auto d = l1::semi_decide(k, o.m, o.n, budget, o.threads);
  Out j{{"result", l1::to_string(d.kind)}, {"m", o.m}, {"n", o.n}, {"nodes", d.nodes},
        {"node_limit_hit", d.node_limit_hit}};
  if (d.witness) {
    j["norm"] = d.witness->norm();
    j["terms"] = witness_terms(*d.witness);
    if (!o.witness_out.empty()) {
      l1::save_json(o.witness_out, l1::witness_to_json(k, *d.witness));
      j["witness"] = o.witness_out;
    }
  }
  emit(j);
  return 0;
}

int run_l1_stream(const Options& o) {
  emit(header("l1 stream",
              {{"complex", o.complex},
               {"cells", o.cells},
               {"max_r", o.max_r},
               {"max_s", o.max_s},
               {"node_limit", o.stream_node_limit}},
              o));
  l1::StreamSchedule schedule{o.max_r, o.max_s, o.stream_node_limit, o.threads};
  l1::SimvolStream stream(l1::load_complex(o.complex), schedule);
  std::uint64_t limited = 0;
  for (std::uint64_t k = 0; k <= o.cells; ++k) {
    const auto q = stream.step();
    const auto& ev = stream.last_event();
    limited += ev.node_limit_hit ? 1 : 0;
    if (!q) continue;
    Out j{{"k", ev.index}, {"bound", q->str()}, {"kind", "upper"}};
    if (ev.seed) {
      j["seed"] = true;
    } else {
      j["cell"] = {{"m", ev.cell.m}, {"r", ev.cell.r}, {"s", ev.cell.s}};
    }
    j["norm"] = ev.witness->norm();
    emit(j);
  }
  emit({{"cells", o.cells},
        {"best", stream.best()->str()},
        {"max_r", stream.schedule().max_r},
        {"max_s", stream.schedule().max_s},
        {"cells_node_limited", limited}});
  return 0;
}

int run_verify(const Options& o) {
  emit(header("l1 verify", {{"witness", o.witness}}, o));
  const l1::WitnessFile f = l1::load_witness(o.witness);
  const auto v = l1::verify_witness(f.complex, f.witness);
  Out j{{"ok", v.ok}, {"m", f.witness.m}, {"n", f.witness.n}, {"norm", f.witness.norm()}};
  if (!v.ok) j["reason"] = v.reason;
  emit(j);
  if (!v.ok) {
    std::cerr << "witness rejected: " << v.reason << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified values, computable-real streams and l1-norm certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for searches")->check(CLI::Range(1u, 256u));
  app.fallthrough();

  int (*handler)(const Options&) = nullptr;
  auto on = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  auto* alpha = app.add_subcommand("alpha", "enclosure of alpha_n = 24 arccos(1 - 2^(-n-1)) / pi");
  alpha->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  alpha->add_option("--bits", o.bits)->check(CLI::Range(1L, 100000L));
  on(alpha, run_alpha);

  auto* scl = app.add_subcommand("scl", "rotation number and scl of the lift of an elliptic matrix");
  scl->add_option("--matrix", o.matrix, "a,b,c,d")->required();
  scl->add_option("--bits", o.bits)->check(CLI::Range(1L, 100000L));
  on(scl, run_scl);

  auto* simvol = app.add_subcommand("simvol", "K * alpha_n, per unit K by default");
  simvol->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  simvol->add_option("--K", o.K)->check(CLI::PositiveNumber);
  simvol->add_option("--bits", o.bits)->check(CLI::Range(1L, 100000L));
  on(simvol, run_simvol);

  auto* indep = app.add_subcommand("independence", "exact and numeric checks on the gamma_p");
  indep->add_option("--primes", o.primes, "comma separated primes")->required();
  indep->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
  indep->add_option("--numeric-bits", o.numeric_bits)->check(CLI::Range(128L, 65536L));
  indep->add_option("--coeff-bound", o.coeff_bound)->check(CLI::NonNegativeNumber);
  on(indep, run_independence);

  auto* specker = app.add_subcommand("specker", "Specker number bounds for a named set");
  specker->add_option("--set", o.set, "evens, odds, empty, all, squares, halting");
  specker->add_option("--budget", o.budget, "schedule cells to visit");
  on(specker, run_specker);

  auto* stream = app.add_subcommand("stream", "dump a bound stream");
  stream->add_option("--source", o.source)
      ->check(CLI::IsMember({"specker", "specker-complement", "inf-ratio", "simvol"}));
  stream->add_option("--set", o.set);
  stream->add_option("--complex", o.complex);
  stream->add_option("--steps", o.steps);
  on(stream, run_stream);

  auto* hom = app.add_subcommand("homology", "simplicial homology via Smith normal form");
  hom->add_option("--complex", o.complex)->required();
  hom->add_option("--degree", o.degree)->required()->check(CLI::NonNegativeNumber);
  hom->add_flag("--rationals", o.rationals, "rational coefficients");
  on(hom, run_homology);

  auto* l1 = app.add_subcommand("l1", "l1-norm certificates for fundamental classes");
  l1->require_subcommand(1);
  auto* semi = l1->add_subcommand("semi-decide", "search for a witness of ||m [T]||_1 <= n");
  semi->add_option("--complex", o.complex)->required();
  semi->add_option("--m", o.m)->check(CLI::PositiveNumber);
  semi->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  semi->add_option("--rmax", o.rmax)->check(CLI::Range(0, 8));
  semi->add_option("--smax", o.smax)->check(CLI::Range(0, 4));
  semi->add_option("--max-terms", o.max_terms);
  semi->add_option("--node-limit", o.node_limit);
  semi->add_option("--out", o.witness_out, "write the witness here");
  on(semi, run_semi_decide);

  auto* l1s = l1->add_subcommand("stream", "upper bounds for the simplicial volume");
  l1s->add_option("--complex", o.complex)->required();
  l1s->add_option("--cells", o.cells);
  l1s->add_option("--max-r", o.max_r)->check(CLI::Range(-1, 8));
  l1s->add_option("--max-s", o.max_s)->check(CLI::Range(-1, 4));
  l1s->add_option("--node-limit", o.stream_node_limit);
  on(l1s, run_l1_stream);

  auto* verify = l1->add_subcommand("verify", "re-verify a witness file");
  verify->add_option("--witness", o.witness)->required();
  on(verify, run_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return handler(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
