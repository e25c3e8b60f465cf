"""Cached computations shared by several checks."""

from __future__ import annotations

import math
from functools import lru_cache

from .. import catalog
from ..group import LINEAR, PROJECTIVE, GroupElement, MatrixGroup, element_order, tag_isomorphism_type
from ..linalg import eigen_lines
from ..projgeom import (
    ProjLine, ProjPoint, fixed_lines_of_involution, line_orbit, lines_meet, orbit, transform_line,
)
from ..poly import line_in_surface

LINE_FAMILIES = ("ell", "ell_check", "ell_p", "ell_p_check", "ell_pp", "ell_pp_check")


def group(name: str, mode: str = PROJECTIVE) -> MatrixGroup:
    return catalog.group(name, mode)


@catalog.register_cache
@lru_cache(maxsize=None)
def line_families() -> dict[str, list[ProjLine]]:
    """Each seed line followed by its images under T, T^2, T^3, T^4."""
    t = catalog.matrix("T")
    out = {}
    for seed in LINE_FAMILIES:
        lines = [catalog.get(seed)]
        for _ in range(4):
            lines.append(transform_line(t, lines[-1]))
        out[seed] = lines
    return out


def line_label(family: str, k: int) -> str:
    return f"{family}{k + 1}"


@catalog.register_cache
@lru_cache(maxsize=None)
def involution_lines() -> list[tuple[int, tuple[ProjLine, ProjLine]]]:
    hb = group("H")
    return [(i, fixed_lines_of_involution(e)) for i, e in enumerate(hb.elements) if i != hb.identity_index]


@catalog.register_cache
@lru_cache(maxsize=None)
def sigma20_orbits() -> dict[str, tuple[ProjPoint, ...]]:
    """Computed orbits, each seeded by the first printed point of its list."""
    g = group("G80")
    return {k: orbit(g, catalog.get(k)[0]).members for k in ("Sigma20", "Sigma20p", "Sigma20pp")}


@catalog.register_cache
@lru_cache(maxsize=None)
def sigma16_orbits() -> dict[int, tuple[ProjPoint, ...]]:
    g = group("G80")
    return {j: orbit(g, catalog.get(f"Sigma16_{j}")[0]).members for j in range(1, 5)}


def key_set(points, n: int = 40) -> frozenset:
    return frozenset(p.in_field(n).key() for p in points)


def meets(a: ProjLine, b: ProjLine) -> bool:
    return lines_meet(a, b) is not None


@catalog.register_cache
@lru_cache(maxsize=None)
def g144_factors() -> tuple[frozenset[int], frozenset[int]]:
    tag = tag_isomorphism_type(group("G144"))
    if tag.name != "A4 x A4":
        raise RuntimeError(f"expected A4 x A4, got {tag.name}")
    return frozenset(tag.witness["factor_1"]), frozenset(tag.witness["factor_2"])


@catalog.register_cache
@lru_cache(maxsize=None)
def _g144_lifts() -> dict:
    lin = group("G144", LINEAR)
    return {GroupElement(e.matrix, PROJECTIVE).key(): e for e in lin.elements}


def _eigen_plane_lines(elem: GroupElement) -> list[ProjLine]:
    """Lines of fixed points of a projective element, from 2-dimensional eigenspaces of a lift."""
    lift = _g144_lifts()[elem.key()]
    k = element_order(lift)
    out = []
    for _, basis in eigen_lines(lift.matrix, k):
        if len(basis) == 2:
            out.append(ProjLine(basis, math.lcm(lift.n, k)))
    return out


@catalog.register_cache
@lru_cache(maxsize=None)
def quadric_curves() -> dict[str, frozenset[ProjLine]]:
    """The six G144-irreducible unions of lines on Q = {xz + yw = 0}, labelled by their quartic incidences.

    Order-3 elements of one A4 factor fix lines of a ruling through length-4 orbits of P^1;
    involutions fix the lines through the length-6 orbit.  Labels follow the incidence of the
    L4 curves with the quartics p1..p4 (each curve lies on exactly two of them).
    """
    g = group("G144")
    quadric = catalog.get("Q3")
    rulings = []
    for factor in g144_factors():
        fours, sixes = {}, {}
        for idx in factor:
            o = g.orders[idx]
            if o not in (2, 3):
                continue
            for line in _eigen_plane_lines(g.elements[idx]):
                if line_in_surface(line, quadric):
                    (fours if o == 3 else sixes)[line.key()] = line
        rulings.append((list(fours.values()), list(sixes.values())))

    quartics = [catalog.get(f"p{i}") for i in range(1, 5)]
    expected = {
        frozenset({2, 3}): "L4_1", frozenset({1, 4}): "L4_2",
        frozenset({2, 4}): "L4_3", frozenset({1, 3}): "L4_4",
    }
    curves: dict[str, frozenset[ProjLine]] = {}
    ruling_of = {}
    for r, (fours, sixes) in enumerate(rulings):
        seen = set()
        for line in fours:
            if line.key() in seen:
                continue
            orb = line_orbit(g, line)
            seen |= {ln.key() for ln in orb}
            inside = frozenset(i + 1 for i, f in enumerate(quartics) if all(line_in_surface(ln, f) for ln in orb))
            label = expected.get(inside)
            if label is None or label in curves:
                raise RuntimeError(f"unexpected quartic incidence {sorted(inside)} for a length-4 line orbit")
            curves[label] = orb
            ruling_of[label] = r
        six = frozenset(sixes)
        if len(six) != 6 or len(line_orbit(g, sixes[0])) != 6:
            raise RuntimeError("involution lines on Q do not form a single six-line orbit")
        curves[f"six_{r}"] = six
    if ruling_of["L4_1"] != ruling_of["L4_2"] or ruling_of["L4_3"] != ruling_of["L4_4"]:
        raise RuntimeError("L4 labels do not respect the rulings")
    first = ruling_of["L4_1"]
    curves["L6_1"] = curves.pop(f"six_{first}")
    curves["L6_2"] = curves.pop(f"six_{1 - first}")
    return {k: curves[k] for k in ("L4_1", "L4_2", "L4_3", "L4_4", "L6_1", "L6_2")}


def curve_intersection_points(a: frozenset[ProjLine], b: frozenset[ProjLine]) -> dict[tuple, ProjPoint]:
    """Intersection points of two unions of lines, keyed in the field Q(zeta24)."""
    pts = {}
    for la in a:
        for lb in b:
            if la == lb:
                continue
            p = lines_meet(la, lb)
            if p is not None:
                p = p.in_field(24)
                pts.setdefault(p.key(), p)
    return pts


def curve_intersection(a: frozenset[ProjLine], b: frozenset[ProjLine]) -> frozenset:
    return frozenset(curve_intersection_points(a, b))
