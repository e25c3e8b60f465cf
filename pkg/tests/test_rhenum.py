import itertools

import pytest

from p3groups.rhenum import RHProblem, RHSolution, brute_force, format_table, satisfies, solve


def small_problems(max_order=12, max_genus=5):
    for order in range(1, max_order + 1):
        divisors = [d for d in range(2, order + 1) if order % d == 0]
        for r in range(len(divisors) + 1):
            for stabs in itertools.combinations(divisors, r):
                for gmax in range(max_genus + 1):
                    yield RHProblem(order, frozenset(stabs), gmax)


def test_brute_force_equivalence_small_problems():
    count = 0
    for p in small_problems():
        assert solve(p) == brute_force(p), p
        count += 1
    assert count > 300


def test_every_solution_satisfies_the_identity():
    p = RHProblem(80, frozenset({2, 5}), 19)
    sols = solve(p)
    assert sols and all(satisfies(p, s) for s in sols)


def test_order_80_table():
    sols = solve(RHProblem(80, frozenset({2, 5}), 19, genus_min=2))
    assert [s.as_dict() for s in sols] == [
        {"g": 5, "quotient_genus": 0, "a16": 2, "a40": 1},
        {"g": 13, "quotient_genus": 0, "a16": 1, "a40": 3},
        {"g": 17, "quotient_genus": 0, "a16": 3, "a40": 0},
    ]


def test_order_80_low_genus_rows():
    sols = solve(RHProblem(80, frozenset({2, 5}), 19))
    assert [(s.g, s.quotient_genus) for s in sols if s.g < 2] == [(1, 0), (1, 1)]


def test_order_144_table():
    sols = solve(RHProblem(144, frozenset({2, 3, 6}), 13, genus_min=2))
    assert [(s.g, s.count(24), s.count(48), s.count(72)) for s in sols] == [
        (13, 0, 1, 3), (13, 1, 2, 0), (13, 2, 0, 1),
    ]


def test_printed_genus_8_row_violates_identity():
    p = RHProblem(144, frozenset({2, 3, 6}), 13)
    row = RHSolution(8, 0, ((24, 0), (48, 0), (72, 3)))
    assert not satisfies(p, row)
    # -288 + 3 * 72 = -72, while 2g - 2 = 14
    assert 144 * -2 + 3 * 72 == -72


def test_validation():
    with pytest.raises(ValueError):
        RHProblem(0, frozenset(), 1)
    with pytest.raises(ValueError):
        RHProblem(10, frozenset({3}), 1)
    with pytest.raises(ValueError):
        RHProblem(10, frozenset({2}), 101)


def test_format_table():
    p = RHProblem(80, frozenset({2, 5}), 19, genus_min=2)
    text = format_table(p, solve(p))
    assert text.splitlines()[0].split() == ["g", "g_quot", "a16", "a40"]
    assert len(text.splitlines()) == 4
