from fractions import Fraction
from pathlib import Path

import pytest

import moricone

ROOT = Path(__file__).resolve().parents[2]


def test_relative_cones():
    rc = moricone.relative_cones()
    assert rc["verified"]
    assert all(isinstance(x, Fraction) for ray in rc["ne"] for x in ray)


def test_flip_and_invalid_input():
    r = moricone.classify_construction(3, 2, [1])
    assert r["modification"] == "flip"
    assert r["K_dot_e"] == -1
    with pytest.raises(ValueError):
        moricone.classify_construction(2, 3, [3], a_in_b=True)


def test_minus_one_counts():
    assert [len(moricone.minus_one_classes(r)) for r in range(1, 9)] == [1, 3, 6, 10, 16, 27, 56, 240]


def test_scenario_verified():
    v = moricone.verify_scenario(1, 3)
    assert v["verified"]
    assert v["equality"] == "equal"


def test_scenario_budget():
    v = moricone.verify_scenario(0, 8, budget_seconds=0.5)
    assert v["containment"]


def test_classification():
    c = moricone.classify_scenario(0, 1)
    assert c["weak_fano"] and not c["fano"]
    assert c["delta_passes"]
    assert c["delta_certificate"]["e"] == Fraction(2, 3)
    assert not moricone.classify_scenario(2, 4)["weak_fano"]


def test_shipped_certificate():
    v = moricone.verify_certificate(str(ROOT / "certificates" / "example_2_2_2_hef.json"))
    assert v["passed"]
    assert any(Fraction(3) in s["pairings"] for s in v["steps"])
    with pytest.raises(ValueError):
        moricone.verify_certificate(str(ROOT / "missing.json"))
