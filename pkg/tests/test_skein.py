import pytest

from cwrinv.cwr import compute_cwr
from cwrinv.diagram import DiagramError, canonical_key, check_alternating, crossing_signs
from cwrinv.poly import R, W, ZERO
from cwrinv.skein import build_family, verify_chain, verify_relations

WTR_FAMILIES = [("K6a1", 12), ("K8a17", 4), ("K8a6", 10), ("K8a16", 2)]
BTW_FAMILIES = [("K6a1", 1), ("K6a2", 6), ("K7a1", 4), ("K7a1", 8)]


@pytest.mark.parametrize("name,site", WTR_FAMILIES)
def test_wtr_families(knot, name, site):
    fam = build_family(knot(name), site, "negative", 2)
    assert fam.relation == "Wtr" and fam.consolidating_color == "black"
    assert fam.variable == R
    rep = verify_relations(fam, 6)
    assert rep.ok, rep.table()
    assert all(rep.single_edge.values())


@pytest.mark.parametrize("name,site", BTW_FAMILIES)
def test_btw_families(knot, name, site):
    fam = build_family(knot(name), site, "positive", 2)
    assert fam.relation == "Btw" and fam.consolidating_color == "white"
    assert fam.variable == W
    rep = verify_relations(fam, 6)
    assert rep.ok, rep.table()


def test_members(knot):
    base = knot("K6a1")
    fam = build_family(base, 12, -1, 2)
    assert sorted(fam.members) == [0, 1, 3, 5]
    assert fam.n_max == 2
    assert fam.members[1] is base
    for k, d in fam.members.items():
        assert check_alternating(d)
        if k:
            assert d.n_crossings == base.n_crossings + k - 1
    assert fam.members[0].n_crossings == base.n_crossings - 1
    assert sorted(crossing_signs(fam.members[5])).count(-1) == crossing_signs(base).count(-1) + 4


def test_n_max_zero_is_identity(knot):
    fam = build_family(knot("K6a1"), 12, -1, 0)
    assert sorted(fam.members) == [0, 1]
    rep = verify_relations(fam, 4)
    assert rep.ok
    assert all(c.lhs == c.rhs for c in rep.checks)


def test_report_table_text(knot):
    rep = verify_relations(build_family(knot("K8a17"), 4, "neg", 1), 3)
    text = rep.table()
    assert "relation Wtr" in text and text.endswith("overall: PASS")


def test_invalid_site(knot):
    with pytest.raises(DiagramError):
        build_family(knot("K6a1"), 999, -1, 1)
    with pytest.raises(DiagramError):
        build_family(knot("K6a1"), 12, +1, 1)  # wrong sign at that crossing
    with pytest.raises(ValueError):
        build_family(knot("K6a1"), 12, -1, -1)
    with pytest.raises(ValueError):
        verify_relations(build_family(knot("K6a1"), 12, -1, 1), 1)


def test_rejects_site_inside_longer_twist(knot):
    # every trefoil crossing already sits in a 3-crossing twist region
    with pytest.raises(DiagramError, match="twist region"):
        build_family(knot("K3a1"), 2, 1, 1)


def test_torus_chain_against_table(records, knot):
    chain = {3: compute_cwr(knot("K3a1")), 5: compute_cwr(knot("K5a2")), 7: compute_cwr(knot("K7a7"))}
    # smoothing the (2, k) region leaves the white graph with a single vertex: all zero
    from cwrinv.cwr import CwrValue
    removed = CwrValue(((ZERO, ZERO),))
    checks = verify_chain(chain, "white", "+", removed, 6)
    assert checks and all(c.ok for c in checks)
    from cwrinv.diagram import insert_twists
    assert canonical_key(insert_twists(knot("K3a1"), 2, 2, 1)) == canonical_key(knot("K5a2"))


def test_chain_requires_even_steps():
    from cwrinv.cwr import parse_cwr
    v = parse_cwr("((w, w))")
    with pytest.raises(ValueError):
        verify_chain({3: v, 4: v}, "white", 1, v, 3)
