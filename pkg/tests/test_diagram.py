import pytest

from cwrinv.diagram import (
    UNKNOT, DiagramError, PlanarDiagram, canonical_key, check_alternating, check_reduced,
    compute_faces, connected_sum, crossing_signs, format_pd, insert_twists, mirror, parse_pd, smooth,
)

TREFOIL = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]"
FIGURE8 = "PD[X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)]"
HOPF = "PD[X(4,1,3,2), X(2,3,1,4)]"


def test_parse_formats():
    a = parse_pd(TREFOIL)
    assert parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]") == a
    assert parse_pd(format_pd(a)) == a
    assert a.n_crossings == 3 and a.n_components == 1


@pytest.mark.parametrize("bad", [
    "PD[X(1,5,2)]",
    "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,7)]",
    "PD[X(1,1,2,2), X(3,3,4,4)]",
    "hello",
])
def test_parse_rejects(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


def test_declared_component_count():
    with pytest.raises(DiagramError):
        parse_pd(TREFOIL + ":2")
    assert parse_pd(HOPF + ":2").n_components == 2


def test_faces_trefoil():
    faces = compute_faces(parse_pd(TREFOIL))
    assert len(faces) == 5
    sizes = sorted(len([f for f in faces if f.color == c]) for c in ("black", "white"))
    assert sizes == [2, 3]
    corners = [cc for f in faces for cc in f.boundary]
    assert len(corners) == len(set(corners)) == 12


def test_faces_figure8_and_unknot():
    assert len(compute_faces(parse_pd(FIGURE8))) == 6
    assert len(compute_faces(UNKNOT)) == 2


def test_adjacent_faces_have_opposite_colors(knot):
    d = knot("K7a1")
    faces = compute_faces(d)
    face_of = {cc: f for f in faces for cc in f.boundary}
    for ci in range(d.n_crossings):
        for k in range(4):
            assert face_of[(ci, k)].color != face_of[(ci, (k + 1) % 4)].color


def test_alternating_and_reduced():
    t = parse_pd(TREFOIL)
    assert check_alternating(t) and check_reduced(t)
    # a kink
    kink = parse_pd("PD[X(1,5,2,4), X(3,1,4,7), X(5,3,6,2), X(6,7,8,8)]")
    assert not check_reduced(kink)
    # flip one crossing of the figure eight: no longer alternating
    flipped = parse_pd("PD[X(4,2,5,1), X(8,6,1,5), X(3,7,4,6), X(2,7,3,8)]")
    assert not check_alternating(flipped)


def test_hopf_link():
    h = parse_pd(HOPF)
    assert h.n_components == 2
    assert check_alternating(h) and check_reduced(h)
    assert len(compute_faces(h)) == 4


def test_signs():
    assert crossing_signs(parse_pd(TREFOIL)) == (1, 1, 1)
    assert sorted(crossing_signs(parse_pd(FIGURE8))) == [-1, -1, 1, 1]
    assert crossing_signs(mirror(parse_pd(TREFOIL))) == (-1, -1, -1)


def test_mirror_involution(records):
    for rec in records:
        d = rec.diagram()
        assert mirror(mirror(d)) == d
        assert all(a == -b for a, b in zip(crossing_signs(d), crossing_signs(mirror(d))))
        assert check_alternating(mirror(d))


def test_connected_sum_shape(knot):
    t = parse_pd(TREFOIL)
    s = connected_sum(t, t)
    assert s.n_crossings == 6 and s.n_components == 1
    assert check_alternating(s) and check_reduced(s)
    assert len(compute_faces(s)) == 8
    assert connected_sum(t, UNKNOT) == t
    s2 = connected_sum(knot("K4a1"), knot("K5a1"))
    assert check_alternating(s2) and s2.n_crossings == 9


def test_insert_twists_trefoil_family(knot):
    t = parse_pd(TREFOIL)
    assert canonical_key(insert_twists(t, 2, 2, "+")) == canonical_key(knot("K5a2"))
    assert canonical_key(insert_twists(t, 2, 4, "+")) == canonical_key(knot("K7a7"))
    assert canonical_key(insert_twists(insert_twists(t, 2, 2, 1), 2, 2, 1)) == \
        canonical_key(insert_twists(t, 2, 4, 1))
    assert insert_twists(t, 2, 0, 1) == t


def test_insert_twists_errors():
    t = parse_pd(TREFOIL)
    with pytest.raises(DiagramError):
        insert_twists(t, 99, 2, 1)
    with pytest.raises(DiagramError):
        insert_twists(t, 2, 2, -1)  # crossing is positive
    with pytest.raises((DiagramError, ValueError)):
        insert_twists(t, 2, 3, 1)


def test_smooth_trefoil_gives_hopf():
    s = smooth(parse_pd(TREFOIL), 0)
    assert s.n_crossings == 2 and s.n_components == 2
