import pytest

from p3groups import catalog
from p3groups.group import PROJECTIVE, GroupElement
from p3groups.projgeom import (
    DegenerateError, ProjLine, ProjPoint, fixed_lines_of_involution, line_orbit, line_stabilizer_order, line_through,
    lines_meet, orbit, point_set, stabilizer, transform_line, transform_point, triple_point_census,
)

import strategies as st


def test_point_normalization_and_parse():
    p = ProjPoint.parse("[0:i:1:0]")
    assert p == ProjPoint.parse("[0:1:-i:0]")
    assert str(ProjPoint([2, 4, 6, 8])) == "[1 : 2 : 3 : 4]"
    with pytest.raises(DegenerateError):
        ProjPoint([0, 0, 0, 0])
    with pytest.raises(ValueError):
        ProjPoint.parse("(1:2:3:4)")
    with pytest.raises(ValueError):
        ProjPoint.parse("[1:2:3]")


def test_lines_meet_and_contain():
    a = line_through(ProjPoint([1, 0, 0, 0]), ProjPoint([0, 1, 0, 0]))
    b = line_through(ProjPoint([1, 1, 0, 0]), ProjPoint([0, 0, 1, 0]))
    c = line_through(ProjPoint([0, 0, 1, 0]), ProjPoint([0, 0, 0, 1]))
    assert lines_meet(a, b) == ProjPoint([1, 1, 0, 0])
    assert lines_meet(a, c) is None
    assert a.contains(ProjPoint([3, -5, 0, 0]))
    with pytest.raises(DegenerateError):
        ProjLine([[1, 0, 0, 0], [2, 0, 0, 0]])


def test_printed_orbit_examples():
    assert len(orbit(catalog.group("G80", PROJECTIVE), ProjPoint.parse("[1:0:1:0]"))) == 20
    assert len(orbit(catalog.group("G144", PROJECTIVE), ProjPoint.parse("[0:1:0:1]"))) == 12
    # a generic point has a free orbit under Hbar
    o = orbit(catalog.group("H", PROJECTIVE), ProjPoint([1, 2, 3, 5]))
    assert len(o) == 16 and o.stabilizer_order == 1


def test_fixed_lines_of_involutions():
    hb = catalog.group("H", PROJECTIVE)
    lines = []
    for e in hb.elements:
        if e.is_identity():
            continue
        a, b = fixed_lines_of_involution(e)
        assert lines_meet(a, b) is None
        assert transform_line(e.matrix, a) == a
        lines += [a, b]
    assert len({ln.in_field(8).key() for ln in lines}) == 30
    assert {line_stabilizer_order(hb, ln) for ln in lines} == {8}


def test_triple_points():
    hb = catalog.group("H", PROJECTIVE)
    lines = [ln for e in hb.elements if not e.is_identity() for ln in fixed_lines_of_involution(e)]
    census = triple_point_census(lines)
    assert len(census) == 60 and set(census.values()) == {3}
    with pytest.raises(ValueError):
        triple_point_census(lines[:1])


def test_line_orbit_of_ell():
    g = catalog.group("G80", PROJECTIVE)
    assert len(line_orbit(g, catalog.get("ell"))) == 10


def test_orbit_stabilizer_property():
    g = catalog.group("G80", PROJECTIVE)
    r = st.rng(6)
    bad = []
    for case in range(st.CASES):
        p = st.point(r, 4 if case % 2 else 1, bound=3)
        o = orbit(g, p)
        s = stabilizer(g, p)
        images = point_set((transform_point(e.matrix, p) for e in g.elements), 4)
        if len(o) * s.order != g.order or len(images) != len(o):
            bad.append(case)
    assert bad == []


def test_orbit_is_invariant():
    g = catalog.group("G144", PROJECTIVE)
    o = orbit(g, ProjPoint.parse("[1:0:0:0]"))
    members = point_set(o.members, 4)
    t = GroupElement(catalog.matrix("A"), PROJECTIVE)
    assert point_set((transform_point(t.matrix, p) for p in o.members), 4) == members
