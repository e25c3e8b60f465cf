"""Seeded random generators shared by the property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from p3groups.cyclo import CycNum, field, root_of_unity
from p3groups.poly import HomPoly, monomials
from p3groups.projgeom import ProjPoint

SEED = 20240917
CASES = 100
FIELDS = (1, 3, 4, 5, 8, 12, 20, 40)


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


def cyc(r: random.Random, n: int, bound: int = 6) -> CycNum:
    acc = CycNum.zero(n)
    for k in range(field(n).phi):
        q = Fraction(r.randint(-bound, bound), r.randint(1, 4))
        acc = acc + CycNum.rational(q, n) * root_of_unity(n, k)
    return acc


def nonzero_cyc(r: random.Random, n: int) -> CycNum:
    while True:
        a = cyc(r, n)
        if a:
            return a


def poly(r: random.Random, degree: int, n: int, terms: int = 5) -> HomPoly:
    mons = monomials(degree)
    chosen = r.sample(mons, min(terms, len(mons)))
    return HomPoly({e: cyc(r, n, 3) for e in chosen}, degree, n)


def point(r: random.Random, n: int = 1, bound: int = 9) -> ProjPoint:
    while True:
        coords = [cyc(r, n, bound) if n > 1 else r.randint(-bound, bound) for _ in range(4)]
        if any(coords):
            return ProjPoint(coords, n)
