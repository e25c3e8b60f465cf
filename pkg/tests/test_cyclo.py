import cmath
import math
from fractions import Fraction

import pytest

from p3groups.cyclo import (
    CycNum, CycParseError, FieldMismatchError, cyclotomic_poly, format_cyc, parse_cyc, root_of_unity, sqrt2,
)

import strategies as st


def numeric(a: CycNum) -> complex:
    """Value under the embedding zeta_n -> exp(2 pi i / n)."""
    z = cmath.exp(2j * math.pi / a.n)
    return sum(c * z ** k for k, c in enumerate(a.num)) / a.den


def close(x: complex, y: complex) -> bool:
    return abs(x - y) < 1e-9 * max(1.0, abs(x), abs(y))


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity_orders():
    for n in (3, 4, 5, 8, 12, 20, 40):
        z = root_of_unity(n)
        assert z ** n == 1
        assert z.multiplicative_order() == n


def test_i_and_sqrt2():
    i = parse_cyc("i")
    assert i * i == -1
    s = sqrt2()
    assert s * s == 2
    assert (1 + i) / s == root_of_unity(8)


def test_xi5_relation():
    xi = parse_cyc("xi5")
    assert 1 + xi + xi ** 2 + xi ** 3 + xi ** 4 == 0
    # 2 cos(72 deg) = (sqrt5 - 1)/2 satisfies t^2 + t - 1 = 0
    t = xi + xi ** 4
    assert t * t + t - 1 == 0


def test_embedding_and_mixed_fields():
    i = parse_cyc("i")
    xi = parse_cyc("xi5")
    prod = i * xi.embed(20)
    assert prod.n == 20
    assert close(numeric(prod), 1j * cmath.exp(2j * math.pi / 5))
    with pytest.raises(FieldMismatchError):
        i + xi
    assert i.embed(40) == i


def test_rational_and_fraction_roundtrip():
    a = CycNum.rational(Fraction(-7, 3), 12)
    assert a.is_rational() and a.to_fraction() == Fraction(-7, 3)
    assert a == Fraction(-7, 3)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(5).inverse()


def test_galois_conjugate_norm_trace():
    xi = root_of_unity(5)
    assert xi.conjugate() == xi ** 4
    assert xi.galois(2) == xi ** 2
    assert xi.trace() == -1
    assert xi.norm() == 1
    assert (1 + parse_cyc("i")).norm() == 2
    with pytest.raises(ValueError):
        xi.galois(5)


def test_parse_format_roundtrip():
    for text in ("1/2 + -3*z{40}^10", "(1+i)/2", "-xi5^3 + 2", "sqrt2/2"):
        a = parse_cyc(text)
        assert parse_cyc(format_cyc(a), a.n) == a


@pytest.mark.parametrize("bad", ["1+", "foo", "i**i", "2^(1/2)", "z{5}^1 + [1]"])
def test_parse_errors(bad):
    with pytest.raises(CycParseError):
        parse_cyc(bad)


def test_parse_respects_field():
    with pytest.raises(CycParseError):
        parse_cyc("i", 5)


def test_field_axioms_property():
    r = st.rng(1)
    failures = []
    for case in range(st.CASES):
        n = r.choice(st.FIELDS)
        a, b, c = st.cyc(r, n), st.cyc(r, n), st.cyc(r, n)
        checks = {
            "add-assoc": (a + b) + c == a + (b + c),
            "add-comm": a + b == b + a,
            "mul-assoc": (a * b) * c == a * (b * c),
            "mul-comm": a * b == b * a,
            "distrib": a * (b + c) == a * b + a * c,
            "neg": a + (-a) == 0,
            "one": a * 1 == a,
            "numeric-mul": close(numeric(a * b), numeric(a) * numeric(b)),
        }
        if a:
            checks["inverse"] = a * a.inverse() == 1
            checks["numeric-inv"] = close(numeric(a.inverse()), 1 / numeric(a))
        failures += [(case, n, k) for k, ok in checks.items() if not ok]
    assert failures == []
