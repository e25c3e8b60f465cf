"""Buchberger completion over Q(zeta_n), leading-ideal Hilbert series and dimension."""

from __future__ import annotations

import contextlib
import heapq
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .cyclo import CycNum
from .poly import HomPoly

DEGREVLEX = "degrevlex"
LEX = "lex"
DEFAULT_STEPS = 200_000
MAX_MONOMIAL_GENERATORS = 64

Monomial = tuple[int, ...]
Sparse = dict  # Monomial -> CycNum


class GroebnerTimeout(TimeoutError):
    """Raised when the reduction budget runs out; ``partial`` holds the basis so far."""

    def __init__(self, message: str, partial: list[HomPoly], steps: int):
        super().__init__(message)
        self.partial = partial
        self.steps = steps


class CostCapError(RuntimeError):
    pass


_budget = [DEFAULT_STEPS]


@contextlib.contextmanager
def step_budget(steps: int):
    """Temporarily change the reduction budget used when ``steps`` is not passed."""
    if steps < 1:
        raise ValueError("step budget must be positive")
    old = _budget[0]
    _budget[0] = steps
    try:
        yield
    finally:
        _budget[0] = old


def order_key(order: str) -> Callable[[Monomial], tuple]:
    if order == DEGREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order == LEX:
        return lambda e: tuple(e)
    raise ValueError(f"unknown monomial order {order!r}")


@dataclass
class IdealBasis:
    generators: list[HomPoly]
    order: str = DEGREVLEX
    groebner_flag: bool = False
    steps: int = field(default=0, compare=False)

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars if self.generators else 4

    def leading_monomials(self) -> list[Monomial]:
        key = order_key(self.order)
        return [max(g.terms, key=key) for g in self.generators if not g.is_zero()]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class _Engine:
    def __init__(self, order: str, n: int, steps: int):
        self.key = order_key(order)
        self.n = n
        self.budget = steps
        self.used = 0

    def lead(self, f: Sparse) -> Monomial:
        return max(f, key=self.key)

    def monic(self, f: Sparse) -> Sparse:
        c = f[self.lead(f)]
        if c == 1:
            return f
        inv = c.inverse()
        return {e: v * inv for e, v in f.items()}

    def tick(self, basis):
        self.used += 1
        if self.used > self.budget:
            partial = basis() if callable(basis) else list(basis)
            raise GroebnerTimeout(f"step budget of {self.budget} reductions exceeded", partial, self.used)

    def reduce(self, f: Sparse, basis: Sequence[Sparse], leads: Sequence[Monomial], partial) -> Sparse:
        """Full normal form of f modulo a monic basis."""
        f = dict(f)
        rem = {}
        while f:
            m = self.lead(f)
            c = f[m]
            for g, lm in zip(basis, leads):
                if _divides(lm, m):
                    self.tick(partial)
                    shift = _quot(m, lm)
                    for e, v in g.items():
                        t = tuple(a + b for a, b in zip(e, shift))
                        nv = f.get(t, CycNum.zero(self.n)) - c * v
                        if nv:
                            f[t] = nv
                        else:
                            f.pop(t, None)
                    break
            else:
                rem[m] = c
                del f[m]
        return rem

    def spoly(self, f: Sparse, g: Sparse, lf: Monomial, lg: Monomial) -> Sparse:
        l = _lcm(lf, lg)
        a, b = _quot(l, lf), _quot(l, lg)
        out = {}
        for e, v in f.items():
            out[tuple(x + y for x, y in zip(e, a))] = v
        for e, v in g.items():
            t = tuple(x + y for x, y in zip(e, b))
            nv = out.get(t, CycNum.zero(self.n)) - v
            if nv:
                out[t] = nv
            else:
                out.pop(t, None)
        return out


def _to_sparse(f: HomPoly, n: int) -> Sparse:
    return {e: c for e, c in f.in_field(n).terms.items()}


def _to_hompoly(f: Sparse, n: int, nvars: int) -> HomPoly:
    return HomPoly(f, None, n, nvars)


def groebner(b: IdealBasis | Sequence[HomPoly], order: str = DEGREVLEX, steps: int | None = None) -> IdealBasis:
    """Reduced Groebner basis by Buchberger's algorithm with the coprime and chain criteria."""
    steps = _budget[0] if steps is None else steps
    if not isinstance(b, IdealBasis):
        b = IdealBasis(list(b), order)
    order = b.order
    gens = [g for g in b.generators if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars = gens[0].nvars
    n = math.lcm(*(g.n for g in gens))
    eng = _Engine(order, n, steps)

    basis: list[Sparse] = []
    leads: list[Monomial] = []
    pairs: list = []
    done: set = set()

    def snapshot():
        return [_to_hompoly(f, n, nvars) for f in basis]

    def add(f: Sparse):
        f = eng.monic(f)
        lm = eng.lead(f)
        k = len(basis)
        basis.append(f)
        leads.append(lm)
        for i in range(k):
            l = _lcm(leads[i], lm)
            heapq.heappush(pairs, (eng.key(l), i, k))

    for g in gens:
        r = eng.reduce(_to_sparse(g, n), basis, leads, snapshot)
        if r:
            add(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if _chain_skip(i, j, l, leads, done):
            continue
        s = eng.spoly(basis[i], basis[j], li, lj)
        if not s:
            continue
        r = eng.reduce(s, basis, leads, snapshot)
        if r:
            add(r)

    reduced = _interreduce(eng, basis, leads, snapshot)
    reduced.sort(key=lambda f: eng.key(eng.lead(f)), reverse=True)
    out = [_to_hompoly(f, n, nvars) for f in reduced]
    return IdealBasis(out, order, True, eng.used)


def _chain_skip(i: int, j: int, l: Monomial, leads: Sequence[Monomial], done: set) -> bool:
    for k, lk in enumerate(leads):
        if k in (i, j) or not _divides(lk, l):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def _interreduce(eng: _Engine, basis, leads, snapshot) -> list[Sparse]:
    keep = []
    for idx, lm in enumerate(leads):
        if any(_divides(leads[o], lm) and (leads[o] != lm or o < idx) for o in range(len(leads)) if o != idx):
            continue
        keep.append(idx)
    polys = [basis[i] for i in keep]
    lms = [leads[i] for i in keep]
    out = []
    for k, f in enumerate(polys):
        others = polys[:k] + polys[k + 1:]
        olms = lms[:k] + lms[k + 1:]
        head = {lms[k]: f[lms[k]]}
        tail = {e: v for e, v in f.items() if e != lms[k]}
        r = eng.reduce(tail, others, olms, snapshot)
        head.update(r)
        out.append(eng.monic(head))
    return out


def normal_form(f: HomPoly, gb: IdealBasis, steps: int | None = None) -> HomPoly:
    steps = _budget[0] if steps is None else steps
    n = math.lcm(f.n, *(g.n for g in gb.generators))
    eng = _Engine(gb.order, n, steps)
    basis = [_to_sparse(g, n) for g in gb.generators]
    leads = [eng.lead(g) for g in basis]
    r = eng.reduce(_to_sparse(f, n), basis, leads, list(gb.generators))
    return HomPoly(r, f.degree, n, f.nvars)


def spolys_reduce_to_zero(gb: IdealBasis) -> bool:
    """Direct re-check of Buchberger's criterion on a finished basis."""
    n = math.lcm(*(g.n for g in gb.generators))
    eng = _Engine(gb.order, n, 10 ** 9)
    basis = [_to_sparse(g, n) for g in gb.generators]
    leads = [eng.lead(g) for g in basis]
    for i, j in combinations(range(len(basis)), 2):
        s = eng.spoly(basis[i], basis[j], leads[i], leads[j])
        if s and eng.reduce(s, basis, leads, []):
            return False
    return True


def is_irrelevant(gb: IdealBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    if not gb.groebner_flag:
        raise ValueError("is_irrelevant needs a Groebner basis")
    lms = gb.leading_monomials()
    for k in range(gb.nvars):
        if not any(e[k] > 0 and sum(e) == e[k] for e in lms):
            return False
    return True


def minimal_monomials(monos: Sequence[Monomial]) -> list[Monomial]:
    uniq = sorted(set(monos), key=lambda e: (sum(e), e))
    out = []
    for m in uniq:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(size)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_numerator(monos: Sequence[Monomial]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/(monos)."""
    gens = minimal_monomials(monos)
    if len(gens) > MAX_MONOMIAL_GENERATORS:
        raise CostCapError(f"{len(gens)} minimal monomial generators exceed the cap of {MAX_MONOMIAL_GENERATORS}")
    return _numerator(tuple(gens))


def _numerator(gens: tuple[Monomial, ...]) -> list[int]:
    if not gens:
        return [1]
    if len(gens) == 1 or all(
        all(x == 0 or y == 0 for x, y in zip(a, b)) for a, b in combinations(gens, 2)
    ):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_sub(out, [0] * d + out)
        return out
    *rest, last = gens
    colon = minimal_monomials([tuple(max(0, x - y) for x, y in zip(m, last)) for m in rest])
    a = _numerator(tuple(rest))
    b = _numerator(tuple(colon))
    return _poly_sub(a, [0] * sum(last) + b)


def hilbert_numerator_inclusion_exclusion(monos: Sequence[Monomial]) -> list[int]:
    gens = minimal_monomials(monos)
    if len(gens) > 20:
        raise CostCapError("inclusion-exclusion limited to 20 generators")
    out = [0]
    for r in range(len(gens) + 1):
        for subset in combinations(gens, r):
            l = tuple(max(col) for col in zip(*subset)) if subset else (0,) * len(gens[0])
            term = [0] * sum(l) + [(-1) ** r]
            out = _poly_sub(out, [-c for c in term])
    return out


def hilbert_function(monos: Sequence[Monomial], degree: int, nvars: int) -> int:
    """Number of degree-d monomials outside the monomial ideal, counted from the series."""
    num = hilbert_numerator(monos)
    return sum(c * math.comb(degree - k + nvars - 1, nvars - 1) for k, c in enumerate(num) if degree >= k)


def _krull_dimension(num: list[int], nvars: int) -> int:
    if all(c == 0 for c in num):
        return -1
    j = 0
    poly = list(num)
    while j < nvars and sum(poly) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in poly[:-1]:
            acc += c
            q.append(acc)
        poly = q
        j += 1
    return nvars - j


def projective_dimension(gb: IdealBasis) -> int:
    """Dimension of the projective zero scheme; -1 when it is empty."""
    if not gb.groebner_flag:
        raise ValueError("projective_dimension needs a Groebner basis")
    num = hilbert_numerator(gb.leading_monomials())
    k = _krull_dimension(num, gb.nvars)
    return -1 if k <= 0 else k - 1


def jacobian_ideal(f: HomPoly) -> IdealBasis:
    return IdealBasis([f.derivative(k) for k in range(f.nvars)], DEGREVLEX)


def minor_ideal(f: HomPoly, g: HomPoly) -> IdealBasis:
    """f, g and the six 2x2 minors of their Jacobian matrix."""
    df = [f.derivative(k) for k in range(4)]
    dg = [g.derivative(k) for k in range(4)]
    minors = [df[a] * dg[b] - df[b] * dg[a] for a, b in combinations(range(4), 2)]
    return IdealBasis([f, g] + minors, DEGREVLEX)


def degree(gb: IdealBasis) -> int:
    """Degree of the projective zero scheme (leading coefficient of the Hilbert polynomial times dim!)."""
    if not gb.groebner_flag:
        raise ValueError("degree needs a Groebner basis")
    num = hilbert_numerator(gb.leading_monomials())
    k = _krull_dimension(num, gb.nvars)
    if k <= 0:
        return 0
    poly = list(num)
    for _ in range(gb.nvars - k):
        acc, q = 0, []
        for c in poly[:-1]:
            acc += c
            q.append(acc)
        poly = q
    return sum(poly)
