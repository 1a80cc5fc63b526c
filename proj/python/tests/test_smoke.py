import os

import pytest

import _artin

FIXTURES = os.environ.get("ARTIN_FIXTURES", "tests/fixtures")


def fixture(name):
    return _artin.Group.load(os.path.join(FIXTURES, name + ".graph"))


def test_braid_relation():
    g = fixture("path3")
    assert g.rank == 3
    assert g.spherical()
    assert g.equal("s t s", "t s t")
    assert not g.equal("s t", "t s")
    assert g.trivial("s u s^-1 u^-1")  # far generators commute
    assert g.nf("s t s") == g.nf("t s t")


def test_classification():
    g = fixture("cycle5")
    assert g.fc_type()
    assert not g.spherical()
    with pytest.raises(RuntimeError):
        g.nf("s1")


def test_parabolic_calculus():
    g = fixture("path3")
    ok, witness = g.adjacent("e", ["s"], "e", ["u"])
    assert ok and witness == "commute-disjoint"
    r = g.minimal("t s t^-1", bound=2)
    # a conjugate of a generator: rank 1, standardization not unique
    assert r["irreducible"] and r["subset"] in ("{s}", "{t}")
    res = g.intersect("e", ["s", "t"], "u", ["t", "u"], budget=4)
    assert res["containment"] and res["saturation"]


def test_cp_domain_and_join():
    assert fixture("path3").cp_domain()["connected"]
    assert not fixture("f2").cp_domain()["connected"]
    j = fixture("product22").join(bound=2)
    assert j["cross_adjacent"] and j["diameter_ok"]


def test_deligne_and_growth():
    ball = fixture("dihedral3").deligne(2)
    assert ball["vertices"] >= 4 and ball["cubes"] >= 1
    csv = fixture("f2").growth_csv("s t", horizon=3, budget=50000)
    lines = csv.strip().splitlines()
    assert lines[0] == "n,distance,nodes_expanded"
    assert lines[1].startswith("1,2")
    assert lines[3].startswith("3,6")
