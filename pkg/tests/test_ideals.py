import itertools

import pytest

from p3groups import catalog
from p3groups.ideals import (
    DEGREVLEX, LEX, CostCapError, GroebnerTimeout, IdealBasis, degree, groebner, hilbert_function,
    hilbert_numerator, hilbert_numerator_inclusion_exclusion, is_irrelevant, jacobian_ideal, minimal_monomials,
    normal_form, order_key, projective_dimension, spolys_reduce_to_zero, step_budget,
)
from p3groups.poly import monomials, parse_poly

import strategies as st


def ideal(*texts):
    return [parse_poly(t) for t in texts]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_hilbert(monos, d, nvars):
    return sum(1 for e in monomials(d, nvars) if not any(divides(m, e) for m in monos))


def test_degrevlex_order():
    key = order_key(DEGREVLEX)
    # x > y > z > w; among degree 2, x*w > y^2 in degrevlex (w-degree decides: smaller is larger)
    assert key((2, 0, 0, 0)) > key((1, 1, 0, 0)) > key((0, 2, 0, 0))
    assert key((0, 2, 0, 0)) > key((1, 0, 0, 1))
    lex = order_key(LEX)
    assert lex((1, 0, 0, 1)) > lex((0, 2, 0, 0))


def test_small_basis():
    gb = groebner(ideal("x^2", "x*y+y^2"))
    assert gb.groebner_flag
    assert sorted(gb.leading_monomials()) == sorted([(2, 0, 0, 0), (1, 1, 0, 0), (0, 3, 0, 0)])
    assert spolys_reduce_to_zero(gb)


def test_normal_form_membership():
    gb = groebner(ideal("x^2 - y*z", "y^2 - x*w"))
    f = parse_poly("(x^2 - y*z)*(z+w) + (y^2 - x*w)*x")
    assert normal_form(f, gb).is_zero()
    assert not normal_form(parse_poly("x*y"), gb).is_zero()


def test_dimensions_of_linear_spaces():
    assert projective_dimension(groebner(ideal("x"))) == 2
    assert projective_dimension(groebner(ideal("x", "y"))) == 1
    assert projective_dimension(groebner(ideal("x", "y", "z"))) == 0
    gb = groebner(ideal("x", "y", "z", "w"))
    assert is_irrelevant(gb) and projective_dimension(gb) == -1
    assert not is_irrelevant(groebner(ideal("x", "y", "z")))


def test_degrees():
    # a quadric surface, the twisted cubic, a complete intersection of a quadric and a cubic
    assert degree(groebner(ideal("x*z - y*w"))) == 2
    cubic = groebner(ideal("x*z - y^2", "y*w - z^2", "x*w - y*z"))
    assert projective_dimension(cubic) == 1 and degree(cubic) == 3
    ci = groebner(ideal("x*y - z*w", "x^3 + y^3 + z^3 + w^3"))
    assert projective_dimension(ci) == 1 and degree(ci) == 6


def test_lex_basis_elimination():
    gb = groebner(ideal("x - y", "y - z"), LEX)
    assert sorted(gb.leading_monomials()) == sorted([(1, 0, 0, 0), (0, 1, 0, 0)])


def test_q0_jacobian_is_irrelevant():
    gb = groebner(jacobian_ideal(catalog.get("q0")))
    assert is_irrelevant(gb) and spolys_reduce_to_zero(gb)
    assert gb.steps < 200_000


def test_singular_quartic_jacobian_degree():
    # the Jacobian scheme of q1 is zero-dimensional of degree 16, one per node
    gb = groebner(jacobian_ideal(catalog.get("q1")))
    assert projective_dimension(gb) == 0 and degree(gb) == 16


def test_timeout_and_partial_basis():
    with pytest.raises(GroebnerTimeout) as info:
        groebner(jacobian_ideal(catalog.get("q0")), steps=5)
    assert info.value.steps >= 5 and isinstance(info.value.partial, list)
    with step_budget(5):
        with pytest.raises(GroebnerTimeout):
            groebner(jacobian_ideal(catalog.get("q0")))
    assert groebner(ideal("x")).generators


def test_preconditions():
    with pytest.raises(ValueError):
        groebner([parse_poly("0*x")])
    with pytest.raises(ValueError):
        projective_dimension(IdealBasis(ideal("x"), DEGREVLEX))
    with pytest.raises(ValueError):
        with step_budget(0):
            pass


def test_cost_cap():
    # all 84 sextic monomials in four variables are minimal generators
    with pytest.raises(CostCapError):
        hilbert_numerator(monomials(6, 4))
    assert hilbert_numerator(monomials(5, 4))[0] == 1
    # 21 quintics in three variables exceed the inclusion-exclusion cap
    with pytest.raises(CostCapError):
        hilbert_numerator_inclusion_exclusion(monomials(5, 3))


def test_hilbert_numerator_matches_inclusion_exclusion():
    r = st.rng(7)
    for _ in range(60):
        nv = r.randint(2, 4)
        k = r.randint(1, 7)
        monos = [tuple(r.randint(0, 3) for _ in range(nv)) for _ in range(k)]
        monos = [m for m in monos if any(m)] or [(1,) + (0,) * (nv - 1)]
        assert hilbert_numerator(monos) == hilbert_numerator_inclusion_exclusion(monos)


def test_hilbert_function_against_counting():
    r = st.rng(8)
    for _ in range(25):
        nv = r.randint(2, 4)
        monos = [tuple(r.randint(0, 3) for _ in range(nv)) for _ in range(r.randint(1, 5))]
        monos = [m for m in monos if any(m)] or [(0,) * (nv - 1) + (2,)]
        for d in range(11):
            assert hilbert_function(monos, d, nv) == brute_hilbert(monos, d, nv)


def test_minimal_monomials():
    assert minimal_monomials([(2, 0), (1, 0), (1, 1), (0, 3)]) == [(1, 0), (0, 3)]


def test_all_monomial_subsets_small():
    gens = [(1, 1, 0), (0, 2, 1), (2, 0, 0), (0, 0, 3)]
    for r in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, r):
            assert hilbert_numerator(sub) == hilbert_numerator_inclusion_exclusion(sub)
