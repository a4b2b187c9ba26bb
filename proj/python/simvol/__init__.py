"""Exact and certified computations around simplicial volume and scl."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "alpha",
    "alpha_cosine",
    "scl",
    "simvol_value",
    "mersenne_gcd",
    "niven_filter",
    "relation_search_exact",
    "relation_search_numeric",
    "specker_bounds",
    "homology",
    "semi_decide",
    "verify_witness",
    "l1_stream",
]


def _frac(text):
    return None if text is None else Fraction(text)


def _interval(pair):
    return (Fraction(pair[0]), Fraction(pair[1]))


def _complex_text(complex):
    if isinstance(complex, str):
        return complex
    return json.dumps(complex)


def alpha_cosine(n):
    return Fraction(_core.alpha_cosine(n))


def alpha(n, bits=64):
    """Enclosure (lo, hi) of alpha_n, and its exact value when known."""
    d = _core.alpha(n, bits)
    return {"n": d["n"], "enclosure": _interval(d["enclosure"]), "exact": _frac(d["exact"])}


def scl(a, b, c, d, bits=64):
    return _interval(_core.scl(str(Fraction(a)), str(Fraction(b)), str(Fraction(c)), str(Fraction(d)), bits))


def simvol_value(n, K, bits=64):
    return _interval(_core.simvol_value(n, K, bits))


def mersenne_gcd(p, q):
    return int(_core.mersenne_gcd(p, q))


def niven_filter(c):
    return _core.niven_filter(str(Fraction(c)))


def relation_search_exact(primes, bound, threads=1):
    return [tuple(r) for r in _core.relation_search_exact(list(primes), bound, threads)]


def relation_search_numeric(primes, coeff_bound, bits=256):
    d = _core.relation_search_numeric(list(primes), coeff_bound, bits)
    d["margin"] = Fraction(d["margin"])
    return d


def specker_bounds(set_name, budget):
    """Best lower bound of x_A and best upper bound of 2 - x_A."""
    lo, up = _core.specker_bounds(set_name, budget)
    return _frac(lo), _frac(up)


def homology(complex, degree, rationals=False):
    return _core.homology(_complex_text(complex), degree, rationals)


def semi_decide(complex, m, n, r_max=0, s_max=0, max_terms=0, node_limit=20_000_000, threads=1):
    d = _core.semi_decide(_complex_text(complex), m, n, r_max, s_max, max_terms, node_limit, threads)
    if d["witness"] is not None:
        d["witness"] = json.loads(d["witness"])
    return d


def verify_witness(witness):
    """(ok, reason) for a witness dict that embeds its complex."""
    text = witness if isinstance(witness, str) else json.dumps(witness)
    return _core.verify_witness(text)


def l1_stream(complex, cells, max_r=-1, max_s=-1, node_limit=2_000_000, threads=1):
    events = _core.l1_stream(_complex_text(complex), cells, max_r, max_s, node_limit, threads)
    for e in events:
        e["bound"] = Fraction(e["bound"])
    return events
