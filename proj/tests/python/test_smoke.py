import json
import math
import os
from fractions import Fraction
from pathlib import Path

import pytest

import simvol

FIXTURES = Path(os.environ.get("SIMVOL_FIXTURES", Path(__file__).parent.parent / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_alpha_zero_is_exact():
    a = simvol.alpha(0, 64)
    assert a["exact"] == 8
    lo, hi = a["enclosure"]
    assert lo <= 8 <= hi


def test_alpha_matches_float_reference():
    for n in range(1, 8):
        lo, hi = simvol.alpha(n, 64)["enclosure"]
        ref = 24 * math.acos(float(simvol.alpha_cosine(n))) / math.pi
        assert float(lo) - 1e-12 <= ref <= float(hi) + 1e-12
        assert hi - lo <= Fraction(1, 2**60)


def test_scl_and_simvol():
    lo, hi = simvol.scl(2, 1 + Fraction(1, 2), -1, Fraction(-1, 4), 64)
    a_lo, a_hi = simvol.alpha(2, 64)["enclosure"]
    assert 48 * lo <= a_hi and a_lo <= 48 * hi
    v_lo, v_hi = simvol.simvol_value(0, 3, 32)
    assert v_lo <= 24 <= v_hi
    with pytest.raises(ValueError):
        simvol.scl(2, 1, 1, 1)


def test_fields():
    assert simvol.mersenne_gcd(4, 6) == 3
    assert simvol.mersenne_gcd(5, 7) == 1
    assert simvol.niven_filter(Fraction(1, 2))
    assert not simvol.niven_filter(Fraction(3, 4))
    assert simvol.relation_search_exact([3, 5], 2) == []
    assert (6,) in simvol.relation_search_exact([2], 6)
    v = simvol.relation_search_numeric([3, 5], 4, 128)
    assert v["verdict"] == "NoRelationFound"
    assert v["margin"] > 0


def test_specker_evens():
    lo, up = simvol.specker_bounds("evens", 24)
    assert Fraction(4, 3) - Fraction(1, 2**20) <= lo <= Fraction(4, 3)
    assert Fraction(2, 3) <= up <= Fraction(2, 3) + Fraction(1, 2**20)


def test_homology():
    assert simvol.homology(load("torus7.json"), 1)["group"] == "Z^2"
    klein = simvol.homology(load("klein.json"), 1)
    assert klein["betti"] == 1 and klein["torsion"] == ["2"]
    assert simvol.homology(load("klein.json"), 1, rationals=True)["group"] == "Q"


def test_semi_decide_and_verify():
    tri = load("triangle.json")
    d = simvol.semi_decide(tri, 1, 1, r_max=2)
    assert d["result"] == "Certified"
    ok, _ = simvol.verify_witness(d["witness"])
    assert ok
    bad = json.loads(json.dumps(d["witness"]))
    for t in bad["terms"]:
        t["coefficient"] = -t["coefficient"]
    ok, reason = simvol.verify_witness(bad)
    assert not ok and reason
    with pytest.raises(ValueError):
        simvol.semi_decide(load("klein.json"), 1, 3)


def test_stream_reaches_half():
    events = simvol.l1_stream(load("triangle.json"), 60)
    bounds = [e["bound"] for e in events]
    assert bounds[0] == 3
    assert min(bounds) <= Fraction(1, 2)
