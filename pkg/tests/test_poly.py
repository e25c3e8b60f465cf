import pytest

from p3groups import catalog
from p3groups.group import LINEAR, GroupElement
from p3groups.linalg import PreconditionError
from p3groups.poly import (
    HomPoly, act, action_matrix, euler_defect, fixed_space_dimension, format_poly, invariant_basis, is_singular_at,
    monomials, one_dim_multiplicities, parse_poly, restrict_to_line, semi_invariant_basis, substitute,
    symmetric_power_trace, symmetric_power_trace_newton,
)
from p3groups.projgeom import ProjPoint

import strategies as st


def test_monomial_counts():
    assert [len(monomials(d)) for d in range(7)] == [1, 4, 10, 20, 35, 56, 84]


def test_parse_and_format():
    f = parse_poly("x^2 - i*y*w + 1/2*z^2")
    assert f.degree == 2 and f.n == 4
    assert parse_poly(format_poly(f), f.n) == f
    with pytest.raises(ValueError):
        parse_poly("x^2 + y")


def test_t_polynomials_sum_to_zero():
    total = catalog.get("t0")
    for k in range(1, 6):
        total = total + catalog.get(f"t{k}")
    assert total.is_zero()


def test_p0_is_square_of_quadric():
    assert catalog.get("p0") == catalog.get("p0-square")
    assert catalog.get("p0").proportional_to(parse_poly("(w*y+x*z)^2"))


def test_q0_is_invariant_and_matches_expansion():
    q0 = catalog.get("q0")
    for key in ("T", "S1", "S2", "T1", "T2"):
        assert act(GroupElement(catalog.matrix(key)), q0) == q0
    assert q0.proportional_to(catalog.get("q0-expansion"))


def test_printed_q0_is_not_T_invariant():
    printed = parse_poly(catalog.entry("q0").value["printed"], names={f"t{k}": catalog.get(f"t{k}") for k in range(6)})
    t = GroupElement(catalog.matrix("T"))
    assert not act(t, printed).proportional_to(printed)
    assert printed.proportional_to(catalog.get("t5"))


def test_newton_trace_oracle():
    g = catalog.group("G80")
    for e in g.elements[::17]:
        for d in (1, 2, 4, 6):
            assert symmetric_power_trace(e.matrix, d) == symmetric_power_trace_newton(e.matrix, d)


def test_trace_matches_action_matrix():
    m = catalog.matrix("T")
    for d in (2, 3):
        a = action_matrix(GroupElement(m), d)
        tr = sum((a[i, i] for i in range(a.rows)), a[0, 0] * 0)
        assert tr == symmetric_power_trace(m, d)


# invariant dimensions by degree 0..6, frozen from fixed_space_dimension (kernel of g - 1 over generators)
FIXED_DIMS = {
    "H": [1, 0, 1, 0, 5, 0, 6],
    "HH": [1, 0, 0, 0, 5, 0, 0],
    "G80": [1, 0, 0, 0, 1, 0, 0],
    "G144": [1, 0, 0, 0, 1, 0, 0],
}
# total multiplicity of one-dimensional characters, from the character inner product
ONE_DIM_TOTALS = {
    "H": [1, 0, 10, 0, 35, 0, 84],
    "G80": [1, 0, 0, 0, 5, 0, 4],
    "G144": [1, 0, 1, 0, 5, 0, 6],
}


@pytest.mark.parametrize("name", sorted(FIXED_DIMS))
def test_fixed_space_dimensions(name):
    g = catalog.group(name)
    assert [fixed_space_dimension(g, d) for d in range(7)] == FIXED_DIMS[name]


@pytest.mark.parametrize("name, degree", [("H", 2), ("H", 4), ("G80", 4), ("G144", 4), ("HH", 4)])
def test_reynolds_agrees_with_fixed_space(name, degree):
    g = catalog.group(name)
    assert len(invariant_basis(g, degree)) == FIXED_DIMS[name][degree]


@pytest.mark.parametrize("name", sorted(ONE_DIM_TOTALS))
def test_one_dim_multiplicity_totals(name):
    g = catalog.group(name)
    totals = [sum(m for _, m in one_dim_multiplicities(g, d)) for d in range(7)]
    assert totals == ONE_DIM_TOTALS[name]


def test_character_method_agrees_with_trivial_fixed_space():
    g = catalog.group("G80")
    for d in (4, 6):
        mults = one_dim_multiplicities(g, d)
        trivial = [m for ch, m in mults if ch.is_trivial()]
        assert trivial == [fixed_space_dimension(g, d)]


def test_semi_invariant_quadric_of_G144():
    g = catalog.group("G144")
    found = [semi_invariant_basis(g, 2, ch) for ch, m in one_dim_multiplicities(g, 2) if m]
    assert len(found) == 1 and len(found[0]) == 1
    assert found[0][0].proportional_to(parse_poly("x*z+y*w"))


def test_restrict_to_line_and_substitute():
    line = catalog.get("ell")
    p, q = line.points()
    f = catalog.get("Q1")
    r = restrict_to_line(f, line, (p, q))
    assert r.nvars == 2 and r.degree == 2
    forms = [HomPoly.linear_form([a, b], r.n) for a, b in zip(p.coords, q.coords)]
    assert substitute(f, forms) == r
    with pytest.raises(PreconditionError):
        restrict_to_line(f, line, (p, ProjPoint([1, 2, 3, 4])))


def test_singular_point_precondition():
    with pytest.raises(PreconditionError):
        is_singular_at(catalog.get("q0"), ProjPoint([1, 0, 0, 0]))


def test_euler_identity_property():
    r = st.rng(4)
    bad = []
    for case in range(st.CASES):
        n = r.choice((1, 4, 5, 20))
        f = st.poly(r, r.randint(1, 5), n)
        if not euler_defect(f).is_zero():
            bad.append(case)
    assert bad == []


def test_action_associativity_property():
    g = catalog.group("G80", LINEAR)
    r = st.rng(5)
    bad = []
    for case in range(st.CASES):
        a, b = g.elements[r.randrange(g.order)], g.elements[r.randrange(g.order)]
        f = st.poly(r, r.randint(1, 4), 20, terms=4)
        # right action: acting by a then by b is acting by a*b
        if act(b, act(a, f)) != act(a * b, f):
            bad.append(case)
    assert bad == []
