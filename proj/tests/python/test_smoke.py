import _dpa as dpa


def test_germ_values():
    assert dpa.germ_lct("x*y") == "1"
    assert dpa.germ_lct("x^2 + y^3") == "5/6"
    assert dpa.germ_lct("x^3 + y^4") == "7/12"


def test_catalog_listing():
    keys = dpa.catalog()
    assert "dp2-klein" in keys
    assert len(keys) >= 12
    assert "kind: quartic-wp1112" in dpa.catalog_entry("dp2-klein")


def test_classify_lookup():
    out = dpa.classify("dp5-a5")
    assert out["exact"] and out["lct"] == "2"
    out = dpa.classify("dp7")
    assert out["exact"] and out["lct"] == "1/3"


def test_classify_subgroup():
    out = dpa.classify("dp2-klein", subgroup="z2x7x3")
    assert out["exact"]
    assert out["lct"] == "15/8"
    assert out["group_order"] == 42


def test_invariants_and_orbits():
    curves = dpa.invariants("dp2-klein", 2, subgroup="z2x7x3")
    assert curves == ["t"]
    orbs = dpa.orbits("dp2-klein", 3, subgroup="z2x7x3")
    assert any(o["length"] == 3 for o in orbs)
