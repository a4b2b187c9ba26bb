// Python extension. Rationals cross as decimal strings "p/q", complexes and
// witnesses as JSON text; the simvol package converts both.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simvol/fields/relations.hpp"
#include "simvol/l1/homology.hpp"
#include "simvol/l1/io.hpp"
#include "simvol/l1/search.hpp"
#include "simvol/reals/operations.hpp"
#include "simvol/scl/rotation.hpp"
#include "simvol/urm/enumerator.hpp"

namespace py = pybind11;
using namespace simvol;
using exact::Rational;

namespace {

py::tuple interval(const exact::DyadicInterval& x) { return py::make_tuple(x.lo().str(), x.hi().str()); }

l1::SimplicialComplex parse_complex(const std::string& text) {
  l1::Json j;
  try {
    j = l1::Json::parse(text);
  } catch (const l1::Json::exception& e) {
    throw std::invalid_argument(std::string("complex: ") + e.what());
  }
  return l1::complex_from_json(j);
}

py::object opt_str(const std::optional<Rational>& q) { return q ? py::object(py::str(q->str())) : py::none(); }

py::dict homology_dict(const l1::HomologyGroup& h) {
  py::dict d;
  d["degree"] = h.degree;
  d["group"] = h.str();
  d["betti"] = h.betti;
  py::list torsion;
  for (const auto& t : h.torsion) torsion.append(t.get_str());
  d["torsion"] = torsion;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "simvol native core";

  m.def("alpha_cosine", [](long n) { return scl::alpha_cosine(n).str(); });
  m.def(
      "alpha",
      [](long n, long bits) {
        const auto a = scl::alpha(n, bits);
        py::dict d;
        d["n"] = a.n;
        d["enclosure"] = interval(a.enclosure);
        d["exact"] = opt_str(a.exact);
        return d;
      },
      py::arg("n"), py::arg("bits") = 64);
  m.def(
      "scl",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& d, long bits) {
        const scl::Matrix2 g(Rational::parse(a), Rational::parse(b), Rational::parse(c), Rational::parse(d));
        return interval(scl::scl_lift(g, bits));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("bits") = 64);
  m.def(
      "simvol_value", [](long n, long K, long bits) { return interval(scl::simvol_value(n, K, bits)); },
      py::arg("n"), py::arg("K"), py::arg("bits") = 64);

  m.def("mersenne_gcd", [](long p, long q) { return fields::mersenne_gcd(p, q).get_str(); });
  m.def("niven_filter", [](const std::string& c) { return fields::niven_filter(Rational::parse(c)); });
  m.def(
      "relation_search_exact",
      [](const std::vector<long>& primes, long bound, unsigned threads) {
        py::gil_scoped_release release;
        return fields::relation_search_exact(primes, bound, threads);
      },
      py::arg("primes"), py::arg("bound"), py::arg("threads") = 1);
  m.def(
      "relation_search_numeric",
      [](const std::vector<long>& primes, long coeff_bound, long bits) {
        fields::NumericVerdict v;
        {
          py::gil_scoped_release release;
          v = fields::relation_search_numeric(primes, coeff_bound, bits);
        }
        py::dict d;
        d["verdict"] = fields::to_string(v.kind);
        d["bits"] = v.bits;
        d["margin"] = v.margin.str();
        d["combinations"] = v.combinations;
        py::list cands;
        for (const auto& c : v.candidates) cands.append(py::make_tuple(c.coeffs, c.confirmed));
        d["candidates"] = cands;
        return d;
      },
      py::arg("primes"), py::arg("coeff_bound"), py::arg("bits") = 256);

  m.def(
      "specker_bounds",
      [](const std::string& set, std::uint64_t budget) {
        auto s = reals::specker(urm::named_set(set));
        for (std::uint64_t k = 0; k < budget; ++k) {
          s.lower.step();
          s.complement_upper.step();
        }
        return py::make_tuple(opt_str(s.lower.best()), opt_str(s.complement_upper.best()));
      },
      py::arg("set"), py::arg("budget"));

  m.def(
      "homology",
      [](const std::string& complex, int degree, bool rationals) {
        return homology_dict(l1::homology(parse_complex(complex), degree,
                                          rationals ? l1::Coefficients::Rationals : l1::Coefficients::Integers));
      },
      py::arg("complex"), py::arg("degree"), py::arg("rationals") = false);

  m.def(
      "semi_decide",
      [](const std::string& complex, long mult, long n, int r_max, int s_max, std::size_t max_terms,
         std::uint64_t node_limit, unsigned threads) {
        const auto K = parse_complex(complex);
        l1::SemiDecision res;
        {
          py::gil_scoped_release release;
          res = l1::semi_decide(K, mult, n, l1::Budget{r_max, s_max, max_terms, node_limit}, threads);
        }
        py::dict d;
        d["result"] = l1::to_string(res.kind);
        d["nodes"] = res.nodes;
        d["node_limit_hit"] = res.node_limit_hit;
        d["witness"] = res.witness ? py::object(py::str(l1::witness_to_json(K, *res.witness).dump())) : py::none();
        return d;
      },
      py::arg("complex"), py::arg("m"), py::arg("n"), py::arg("r_max") = 0, py::arg("s_max") = 0,
      py::arg("max_terms") = 0, py::arg("node_limit") = 20'000'000, py::arg("threads") = 1);

  m.def(
      "verify_witness",
      [](const std::string& witness) {
        const auto w = l1::witness_from_json(l1::Json::parse(witness));
        const auto v = l1::verify_witness(w.complex, w.witness);
        return py::make_tuple(v.ok, v.reason);
      },
      py::arg("witness"));

  m.def(
      "l1_stream",
      [](const std::string& complex, std::uint64_t cells, int max_r, int max_s, std::uint64_t node_limit,
         unsigned threads) {
        l1::SimvolStream s(parse_complex(complex), l1::StreamSchedule{max_r, max_s, node_limit, threads});
        py::list events;
        for (std::uint64_t k = 0; k < cells; ++k) {
          {
            py::gil_scoped_release release;
            s.step();
          }
          const auto& e = s.last_event();
          if (!e.bound) continue;
          py::dict d;
          d["index"] = e.index;
          d["m"] = e.cell.m;
          d["r"] = e.cell.r;
          d["s"] = e.cell.s;
          d["bound"] = e.bound->str();
          events.append(d);
        }
        return events;
      },
      py::arg("complex"), py::arg("cells"), py::arg("max_r") = -1, py::arg("max_s") = -1,
      py::arg("node_limit") = 2'000'000, py::arg("threads") = 1);
}
