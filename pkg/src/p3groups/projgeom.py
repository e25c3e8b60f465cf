"""Points, lines and group orbits in P^3 over a cyclotomic field."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cyclo import CycNum, common_index, parse_cyc, root_of_unity, to_field
from .group import GroupElement, MatrixGroup
from .linalg import Mat, PreconditionError, kernel_basis, rank, rref


class DegenerateError(ValueError):
    pass


class ProjPoint:
    """A point of P^3 scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords", "n")

    def __init__(self, coords: Sequence, n: int | None = None):
        if n is None:
            n = common_index(*coords)
        vals = [to_field(c, n) for c in coords]
        lead = next((v for v in vals if v), None)
        if lead is None:
            raise DegenerateError("all coordinates are zero")
        if lead != 1:
            inv = lead.inverse()
            vals = [v * inv for v in vals]
        self.coords = tuple(vals)
        self.n = n

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "ProjPoint":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"point literal must look like [a:b:c:d], got {text!r}")
        parts = body[1:-1].split(":")
        if len(parts) != 4:
            raise ValueError(f"expected four coordinates in {text!r}")
        parts = [p.replace("−", "-") for p in parts]
        vals = [parse_cyc(p) for p in parts]
        m = common_index(*vals) if n is None else n
        return cls(vals, m)

    def in_field(self, n: int) -> "ProjPoint":
        return self if n == self.n else ProjPoint(self.coords, n)

    def key(self) -> tuple:
        return tuple(c.key()[1:] for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.n == other.n:
            return self.key() == other.key()
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjPoint({self})"


def transform_point(m: Mat | GroupElement, p: ProjPoint) -> ProjPoint:
    mat = m.matrix if isinstance(m, GroupElement) else m
    n = math.lcm(mat.n, p.n)
    return ProjPoint(mat.apply(p.in_field(n).coords), n)


class ProjLine:
    """A line of P^3 stored as the reduced row echelon form of a 2x4 span."""

    __slots__ = ("span", "n")

    def __init__(self, rows: Sequence[Sequence], n: int | None = None):
        m = Mat(rows, n)
        echelon, rk, _ = rref(m)
        if rk != 2:
            raise DegenerateError(f"span has rank {rk}, not 2")
        self.span = Mat(echelon.entries[:2], m.n)
        self.n = m.n

    def in_field(self, n: int) -> "ProjLine":
        return self if n == self.n else ProjLine(self.span.entries, n)

    def key(self) -> tuple:
        return self.span.key()

    def points(self) -> tuple[ProjPoint, ProjPoint]:
        return ProjPoint(self.span.row(0), self.n), ProjPoint(self.span.row(1), self.n)

    def contains(self, p: ProjPoint) -> bool:
        n = math.lcm(self.n, p.n)
        return rank(Mat(list(self.in_field(n).span.entries) + [p.in_field(n).coords], n)) == 2

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        if self.n == other.n:
            return self.key() == other.key()
        return self.span == other.span

    def __hash__(self):
        return hash(self.span)

    def __str__(self):
        a, b = self.span.entries
        return "<" + ", ".join(str(ProjPoint(r, self.n)) for r in (a, b)) + ">"

    def __repr__(self):
        return f"ProjLine({self})"


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    n = math.lcm(p.n, q.n)
    if p.in_field(n) == q.in_field(n):
        raise DegenerateError("a line needs two distinct points")
    return ProjLine([p.in_field(n).coords, q.in_field(n).coords], n)


def transform_line(m: Mat | GroupElement, line: ProjLine) -> ProjLine:
    mat = m.matrix if isinstance(m, GroupElement) else m
    n = math.lcm(mat.n, line.n)
    rows = [mat.apply(r) for r in line.in_field(n).span.entries]
    return ProjLine(rows, n)


def lines_meet(a: ProjLine, b: ProjLine) -> ProjPoint | None:
    """Intersection point of two distinct lines, or None when they are skew."""
    n = math.lcm(a.n, b.n)
    a, b = a.in_field(n), b.in_field(n)
    if a == b:
        raise DegenerateError("lines are equal")
    a1, a2 = a.span.entries
    b1, b2 = b.span.entries
    cols = Mat([[a1[k], a2[k], -b1[k], -b2[k]] for k in range(4)], n)
    ker = kernel_basis(cols)
    if not ker:
        return None
    s1, s2 = ker[0][0], ker[0][1]
    return ProjPoint([s1 * x + s2 * y for x, y in zip(a1, a2)], n)


def _sqrt_root_of_unity(c: CycNum) -> CycNum:
    k = c.multiplicative_order(cap=1000)
    m = math.lcm(c.n, 2 * k)
    c = c.embed(m)
    for j in range(2 * k):
        s = root_of_unity(2 * k, j).embed(m)
        if s * s == c:
            return s
    raise PreconditionError("no square root among roots of unity")


def fixed_lines_of_involution(g: GroupElement | Mat) -> tuple[ProjLine, ProjLine]:
    """The two lines of fixed points of a P^3 involution whose lift squares to a scalar."""
    m = g.matrix if isinstance(g, GroupElement) else g
    sq = m @ m
    if not sq.is_scalar():
        raise PreconditionError("the lift does not square to a scalar")
    s = _sqrt_root_of_unity(sq[0, 0])
    n = s.n
    mm = m.in_field(n)
    ident = Mat.identity(4, n)
    planes = [kernel_basis(mm - ident.scale(s)), kernel_basis(mm + ident.scale(s))]
    if sorted(len(p) for p in planes) != [2, 2]:
        raise PreconditionError("not a P^3 involution with a pair of fixed lines")
    lines = tuple(ProjLine(p, n) for p in planes)
    lines = tuple(sorted(lines, key=lambda ln: ln.key()))
    if lines_meet(*lines) is not None:
        raise RuntimeError("fixed lines of an involution must be skew")
    return lines


@dataclass
class Orbit:
    seed: object
    group: str
    members: tuple
    stabilizer_order: int

    def __len__(self):
        return len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)


def orbit(g: MatrixGroup, p: ProjPoint) -> Orbit:
    """Orbit of a point, with the stabilizer counted by a direct fixing test."""
    n = math.lcm(g.n, p.n)
    p = p.in_field(n)
    members = {}
    fixing = 0
    for e in g.elements:
        q = transform_point(e.matrix.in_field(n), p)
        if q.key() == p.key():
            fixing += 1
        members.setdefault(q.key(), q)
    ordered = tuple(sorted(members.values(), key=lambda q: q.key()))
    if len(ordered) * fixing != g.order:
        raise RuntimeError("orbit-stabilizer identity violated")
    return Orbit(p, g.name or "group", ordered, fixing)


def stabilizer(g: MatrixGroup, p: ProjPoint) -> MatrixGroup:
    n = math.lcm(g.n, p.n)
    p = p.in_field(n)
    idx = [i for i, e in enumerate(g.elements) if transform_point(e.matrix.in_field(n), p).key() == p.key()]
    return g.subgroup(idx, name=f"Stab({p})")


def line_orbit(g: MatrixGroup, line: ProjLine) -> frozenset[ProjLine]:
    n = math.lcm(g.n, line.n)
    line = line.in_field(n)
    out = {}
    for e in g.elements:
        image = transform_line(e.matrix.in_field(n), line)
        out.setdefault(image.key(), image)
    return frozenset(out.values())


def line_stabilizer_order(g: MatrixGroup, line: ProjLine) -> int:
    n = math.lcm(g.n, line.n)
    line = line.in_field(n)
    return sum(1 for e in g.elements if transform_line(e.matrix.in_field(n), line) == line)


def triple_point_census(lines: Iterable[ProjLine]) -> dict[ProjPoint, int]:
    """Every pairwise intersection point, with the number of given lines through it."""
    lines = list(lines)
    if len(lines) < 2:
        raise ValueError("need at least two lines")
    n = math.lcm(*(ln.n for ln in lines))
    lines = [ln.in_field(n) for ln in lines]
    points = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            q = lines_meet(lines[i], lines[j])
            if q is not None:
                points.setdefault(q.key(), q)
    census = {}
    for q in points.values():
        census[q] = sum(1 for ln in lines if ln.contains(q))
    return census


def normalize_points(points: Iterable[ProjPoint], n: int | None = None) -> list[ProjPoint]:
    """Express a collection of points in one common field."""
    points = list(points)
    if n is None:
        n = math.lcm(*(p.n for p in points)) if points else 1
    return [p.in_field(n) for p in points]


def point_set(points: Iterable[ProjPoint], n: int) -> frozenset[tuple]:
    return frozenset(p.in_field(n).key() for p in points)


def random_point(rng: random.Random, bound: int = 9, n: int = 1) -> ProjPoint:
    while True:
        coords = [rng.randint(-bound, bound) for _ in range(4)]
        if any(coords):
            return ProjPoint(coords, n)
