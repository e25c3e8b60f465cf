"""Finite matrix groups in SL4 (linear mode) or PGL4 (projective mode)."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

from .cyclo import CycNum, root_of_unity
from .linalg import Mat, PreconditionError, inverse as mat_inverse

LINEAR = "linear"
PROJECTIVE = "projective"
DEFAULT_CAP = 10000


class GroupTooLargeError(RuntimeError):
    pass


def _canonical(m: Mat) -> Mat:
    for r in m.entries:
        for v in r:
            if v:
                if v == 1:
                    return m
                inv = v.inverse()
                return Mat([[inv * x if x else x for x in row] for row in m.entries], m.n)
    raise ValueError("zero matrix has no projective class")


class GroupElement:
    __slots__ = ("matrix", "mode")

    def __init__(self, matrix: Mat, mode: str = LINEAR):
        if mode not in (LINEAR, PROJECTIVE):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.matrix = _canonical(matrix) if mode == PROJECTIVE else matrix

    @property
    def n(self) -> int:
        return self.matrix.n

    def key(self) -> tuple:
        return self.matrix.key()

    def in_field(self, n: int) -> "GroupElement":
        return self if n == self.n else GroupElement(self.matrix.in_field(n), self.mode)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix, self.mode)

    def inverse(self) -> "GroupElement":
        return GroupElement(mat_inverse(self.matrix), self.mode)

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.matrix ** k, self.mode)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def conjugate_by(self, h: "GroupElement") -> "GroupElement":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.mode == other.mode and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"GroupElement({self.mode}, {self.matrix!r})"


def element_order(g: GroupElement, cap: int = DEFAULT_CAP) -> int:
    """Least k >= 1 with g^k trivial (scalar, in projective mode)."""
    cur = g
    for k in range(1, cap + 1):
        if cur.is_identity():
            return k
        cur = cur * g
    raise GroupTooLargeError(f"element order exceeds {cap}")


class MatrixGroup:
    """A finite group given by generators and its full element list.

    Elements are indexed in breadth-first discovery order, starting from the
    identity; lookups go through the canonical matrix key.
    """

    def __init__(self, mode: str, generators: Sequence[GroupElement], elements: Sequence[GroupElement],
                 name: str | None = None):
        self.mode = mode
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name
        self.n = self.elements[0].n
        self.index = {e.key(): i for i, e in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return self.find(g) is not None

    def __iter__(self):
        return iter(self.elements)

    def find(self, g: GroupElement) -> int | None:
        if g.mode != self.mode:
            g = GroupElement(g.matrix, self.mode)
        if g.n != self.n:
            if self.n % g.n == 0:
                g = g.in_field(self.n)
            else:
                return self._index_over(math.lcm(self.n, g.n)).get(g.in_field(math.lcm(self.n, g.n)).key())
        return self.index.get(g.key())

    def _index_over(self, n: int) -> dict:
        cache = self.__dict__.setdefault("_wide_index", {})
        if n not in cache:
            cache[n] = {e.in_field(n).key(): i for i, e in enumerate(self.elements)}
        return cache[n]

    def __repr__(self):
        label = self.name or "group"
        return f"MatrixGroup({label}, {self.mode}, order={self.order})"

    # index-level helpers
    def mul_index(self, i: int, j: int) -> int:
        t = self._table
        if t is not None:
            return t[i][j]
        return self.index[(self.elements[i] * self.elements[j]).key()]

    _table = None

    def multiplication_table(self) -> list[list[int]]:
        if self._table is None:
            els = self.elements
            self._table = [[self.index[(a * b).key()] for b in els] for a in els]
        return self._table

    @cached_property
    def inverse_index(self) -> tuple[int, ...]:
        ident = self.identity_index
        inv = [None] * self.order
        for i in range(self.order):
            if inv[i] is not None:
                continue
            # powers[j] is the index of e^j; the inverse of e^j is e^(k-j)
            powers = [ident, i]
            while powers[-1] != ident:
                powers.append(self.mul_index(powers[-1], i))
            k = len(powers) - 1
            for j in range(k):
                inv[powers[j]] = powers[(k - j) % k]
        return tuple(inv)

    @cached_property
    def identity_index(self) -> int:
        for i, e in enumerate(self.elements):
            if e.is_identity():
                return i
        raise RuntimeError("group has no identity")

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(element_order(e) for e in self.elements)

    def order_statistics(self) -> dict[int, int]:
        return dict(sorted(Counter(self.orders).items()))

    def inverse_of(self, i: int) -> int:
        return self.inverse_index[i]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all((a * b).key() == (b * a).key() for a in gens for b in gens)

    def subgroup(self, indices: Iterable[int], generators: Sequence[GroupElement] | None = None,
                 name: str | None = None) -> "MatrixGroup":
        idx = sorted(set(indices))
        ident = self.identity_index
        if ident in idx:
            idx.remove(ident)
        idx = [ident] + idx
        els = [self.elements[i] for i in idx]
        return MatrixGroup(self.mode, tuple(generators) if generators is not None else tuple(els[1:]), els, name)

    def indices_of(self, sub: "MatrixGroup") -> frozenset[int]:
        out = []
        for e in sub.elements:
            i = self.find(e)
            if i is None:
                raise PreconditionError(f"{sub!r} is not contained in {self!r}")
            out.append(i)
        return frozenset(out)

    def closure_indices(self, gens: Iterable[int]) -> frozenset[int]:
        """Index set of the subgroup generated by the given element indices."""
        gens = [g for g in set(gens) if g != self.identity_index]
        seen = {self.identity_index}
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul_index(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def conjugate_index(self, x: int, h: int) -> int:
        """Index of h^-1 x h."""
        return self.mul_index(self.mul_index(self.inverse_of(h), x), h)

    def normal_closure_indices(self, gens: Iterable[int]) -> frozenset[int]:
        ggens = [self.find(g) for g in self.generators]
        current = set(self.closure_indices(gens))
        while True:
            extra = {self.conjugate_index(x, h) for x in current for h in ggens} - current
            if not extra:
                return frozenset(current)
            current = set(self.closure_indices(current | extra))


def close(generators: Sequence, mode: str = LINEAR, cap: int = DEFAULT_CAP, name: str | None = None) -> MatrixGroup:
    """Breadth-first closure of the group generated by the given matrices."""
    gens = [g if isinstance(g, GroupElement) else GroupElement(g, mode) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    size = gens[0].matrix.rows
    n = math.lcm(*(g.n for g in gens))
    gens = [GroupElement(g.matrix.in_field(n), mode) for g in gens]
    ident = GroupElement(Mat.identity(size, n), mode)
    elements = [ident]
    seen = {ident.key()}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                k = y.key()
                if k not in seen:
                    seen.add(k)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise GroupTooLargeError(f"group too large: more than {cap} elements")
        frontier = nxt
    return MatrixGroup(mode, gens, elements, name)


def projective_image(g: MatrixGroup, cap: int = DEFAULT_CAP, name: str | None = None) -> MatrixGroup:
    return close([e.matrix for e in g.generators], PROJECTIVE, cap, name)


def is_normal(sub: MatrixGroup, g: MatrixGroup) -> bool:
    """True iff conjugation by every generator of g preserves sub."""
    sub_idx = g.indices_of(sub)
    for h in g.generators:
        hi = g.find(h)
        for x in sub_idx:
            if g.conjugate_index(x, hi) not in sub_idx:
                return False
    return True


def conjugacy_classes(g: MatrixGroup) -> list[list[GroupElement]]:
    return [[g.elements[i] for i in cls] for cls in conjugacy_class_indices(g)]


def conjugacy_class_indices(g: MatrixGroup) -> list[tuple[int, ...]]:
    cached = getattr(g, "_classes", None)
    if cached is not None:
        return cached
    ggens = [g.find(h) for h in g.generators]
    assigned = [False] * g.order
    classes = []
    for i in range(g.order):
        if assigned[i]:
            continue
        orbit = [i]
        assigned[i] = True
        k = 0
        while k < len(orbit):
            x = orbit[k]
            for h in ggens:
                y = g.conjugate_index(x, h)
                if not assigned[y]:
                    assigned[y] = True
                    orbit.append(y)
            k += 1
        classes.append(tuple(sorted(orbit)))
    g._classes = classes
    return classes


def commutator_subgroup(g: MatrixGroup) -> MatrixGroup:
    """[g, g] as the normal closure of commutators of generator pairs."""
    gi = [g.find(h) for h in g.generators]
    comms = set()
    for a in gi:
        for b in gi:
            # a^-1 b^-1 a b
            c = g.mul_index(g.mul_index(g.inverse_of(a), g.inverse_of(b)), g.mul_index(a, b))
            comms.add(c)
    idx = g.normal_closure_indices(comms)
    return g.subgroup(idx, name=f"[{g.name or 'G'},{g.name or 'G'}]")


def center(g: MatrixGroup) -> MatrixGroup:
    gi = [g.find(h) for h in g.generators]
    idx = [x for x in range(g.order) if all(g.mul_index(x, h) == g.mul_index(h, x) for h in gi)]
    return g.subgroup(idx, name=f"Z({g.name or 'G'})")


@dataclass
class AbelianQuotient:
    factors: tuple[int, ...]
    coset_of: tuple[int, ...]  # element index -> coset id
    representatives: tuple[int, ...]  # coset id -> element index
    exponent: int

    @property
    def order(self) -> int:
        return len(self.representatives)


def _invariant_factors(order_counts: dict[int, int], size: int) -> tuple[int, ...]:
    # number of cyclic p-factors of order >= p^k is log_p(|Q[p^k]| / |Q[p^(k-1)]|)
    elementary = []
    m = size
    p = 2
    primes = []
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    for p in primes:
        prev = 1
        k = 1
        at_least = []
        while True:
            cnt = sum(c for o, c in order_counts.items() if (p ** k) % o == 0)
            ratio = cnt // prev
            if ratio == 1:
                break
            at_least.append(round(math.log(ratio, p)))
            prev = cnt
            k += 1
        # at_least[k-1] = number of factors with order >= p^k
        for k in range(len(at_least)):
            nxt = at_least[k + 1] if k + 1 < len(at_least) else 0
            elementary.extend([p ** (k + 1)] * (at_least[k] - nxt))
    # combine elementary divisors into invariant factors d1 | d2 | ...
    by_prime: dict[int, list[int]] = {}
    for q in elementary:
        p = min(d for d in range(2, q + 1) if q % d == 0)
        by_prime.setdefault(p, []).append(q)
    for lst in by_prime.values():
        lst.sort(reverse=True)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for lst in by_prime.values():
            if i < len(lst):
                f *= lst[i]
        factors.append(f)
    return tuple(sorted(factors))


def abelian_quotient(g: MatrixGroup) -> AbelianQuotient:
    """g / [g, g] with its invariant factors and the coset projection."""
    d_idx = sorted(g.indices_of(commutator_subgroup(g)))
    coset_of = [-1] * g.order
    reps = []
    for i in range(g.order):
        if coset_of[i] < 0:
            cid = len(reps)
            reps.append(i)
            for d in d_idx:
                coset_of[g.mul_index(i, d)] = cid
    q_order = len(reps)

    def qmul(a: int, b: int) -> int:
        return coset_of[g.mul_index(reps[a], reps[b])]

    ident = coset_of[g.identity_index]
    counts: Counter = Counter()
    for c in range(q_order):
        k, cur = 1, c
        while cur != ident:
            cur = qmul(cur, c)
            k += 1
        counts[k] += 1
    factors = _invariant_factors(dict(counts), q_order) if q_order > 1 else ()
    exponent = math.lcm(*factors) if factors else 1
    return AbelianQuotient(factors, tuple(coset_of), tuple(reps), exponent)


@dataclass
class Character:
    """A one-dimensional character with values zeta_exponent^values[i]."""

    exponent: int
    values: tuple[int, ...]  # per element index, as powers of zeta_exponent

    def value(self, i: int, n: int | None = None) -> CycNum:
        z = root_of_unity(self.exponent, self.values[i])
        return z if n is None else z.embed(n)

    def is_trivial(self) -> bool:
        return not any(self.values)


def one_dim_characters(g: MatrixGroup) -> list[Character]:
    """All homomorphisms g -> C*, built by extending along a generator chain
    of the abelian quotient."""
    q = abelian_quotient(g)
    e = q.exponent
    reps, coset_of = q.representatives, q.coset_of

    def qmul(a, b):
        return coset_of[g.mul_index(reps[a], reps[b])]

    ident = coset_of[g.identity_index]
    # characters on the subgroup built so far: list of dicts coset -> exponent
    members = [ident]
    chars = [{ident: 0}]
    for c in range(len(reps)):
        if c in chars[0]:
            continue
        # smallest r with c^r in the current subgroup
        r, cur = 1, c
        while cur not in chars[0]:
            cur = qmul(cur, c)
            r += 1
        powers = [ident]
        for _ in range(r - 1):
            powers.append(qmul(powers[-1], c))
        new_chars = []
        for ch in chars:
            target = ch[cur]
            # values v with r*v = target mod e
            for v in range(e):
                if (r * v - target) % e:
                    continue
                ext = {}
                for s, ps in enumerate(powers):
                    for h in members:
                        ext[qmul(h, ps)] = (ch[h] + s * v) % e
                new_chars.append(ext)
        members = list(new_chars[0].keys())
        chars = new_chars
    out = []
    for ch in chars:
        vals = tuple(ch[coset_of[i]] for i in range(g.order))
        out.append(Character(e, vals))
    out.sort(key=lambda c: tuple(c.values[g.find(h)] for h in g.generators))
    for ch in out:
        for a in g.generators:
            for b in g.generators:
                ia, ib = g.find(a), g.find(b)
                if (ch.values[ia] + ch.values[ib] - ch.values[g.mul_index(ia, ib)]) % e:
                    raise RuntimeError("character is not multiplicative")
    return out


def generated_subgroups(g: MatrixGroup, max_generators: int) -> list[frozenset[int]]:
    """All distinct subgroups generated by at most ``max_generators`` elements,
    as index sets sorted by (order, members)."""
    if g.order > 600:
        raise GroupTooLargeError("generated_subgroups is limited to groups of order <= 600")
    if max_generators >= 4 and g.order > 160:
        raise GroupTooLargeError("four-generator enumeration is limited to order <= 160")
    g.multiplication_table()
    found = {frozenset([g.identity_index])}
    layer = set(found)
    for _ in range(max_generators):
        nxt = set()
        for s in layer:
            for x in range(g.order):
                if x in s:
                    continue
                t = g.closure_indices(set(s) | {x})
                if t not in found:
                    found.add(t)
                    nxt.add(t)
        layer = nxt
        if not layer:
            break
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@dataclass
class IsoTag:
    name: str
    order: int
    witness: dict = dc_field(default_factory=dict)
    order_statistics: dict = dc_field(default_factory=dict)

    def __str__(self):
        return self.name


def _is_elementary_abelian_2(g: MatrixGroup, idx: frozenset[int]) -> bool:
    ident = g.identity_index
    if any(g.mul_index(x, x) != ident for x in idx):
        return False
    return all(g.mul_index(a, b) == g.mul_index(b, a) for a in idx for b in idx)


def _sub_is_normal(g: MatrixGroup, idx: frozenset[int]) -> bool:
    ggens = [g.find(h) for h in g.generators]
    return all(g.conjugate_index(x, h) in idx for x in idx for h in ggens)


def _involutions_subgroup(g: MatrixGroup, idx: frozenset[int]) -> frozenset[int] | None:
    """The elements of order <= 2 in idx, if they form a subgroup."""
    ident = g.identity_index
    inv = frozenset(x for x in idx if g.mul_index(x, x) == ident)
    if all(g.mul_index(a, b) in inv for a in inv for b in inv):
        return inv
    return None


def _tag_a4(g: MatrixGroup, idx: frozenset[int]) -> dict | None:
    if len(idx) != 12:
        return None
    if any(g.orders[x] == 6 for x in idx):
        return None
    v4 = _involutions_subgroup(g, idx)
    if v4 is None or len(v4) != 4:
        return None
    if not all(g.conjugate_index(x, h) in v4 for x in v4 for h in idx):
        return None
    return {"normal_klein": sorted(v4), "max_element_order": max(g.orders[x] for x in idx)}


def tag_isomorphism_type(g: MatrixGroup) -> IsoTag:
    if g.order > 600:
        raise GroupTooLargeError("tagging is limited to order <= 600")
    g.multiplication_table()
    stats = g.order_statistics()
    full = frozenset(range(g.order))
    order = g.order

    if order == 1:
        return IsoTag("trivial", 1, {}, stats)
    # cyclic
    for i, o in enumerate(g.orders):
        if o == order:
            return IsoTag(f"cyclic-{order}", order, {"generator": i}, stats)
    if _is_elementary_abelian_2(g, full):
        k = order.bit_length() - 1
        return IsoTag(f"elementary-abelian-2^{k}", order, {"all_orders_le_2": True, "commutative": True}, stats)
    a4 = _tag_a4(g, full)
    if a4 is not None:
        return IsoTag("A4", order, a4, stats)

    # semidirect products with a normal elementary abelian 2-subgroup of order 16
    if order in (80, 160):
        fives = [i for i, o in enumerate(g.orders) if o == 5]
        if fives:
            c = fives[0]
            n80 = g.normal_closure_indices([c]) if order == 160 else full
            base = _involutions_subgroup(g, n80)
            if base is not None and len(base) == 16 and _is_elementary_abelian_2(g, base) and _sub_is_normal(g, base):
                c5 = g.closure_indices([c])
                if order == 80 and len(c5 & base) == 1:
                    return IsoTag("mu2^4 x| mu5", order, {
                        "normal_subgroup": sorted(base), "complement_generator": c,
                        "complement_order": 5}, stats)
                if order == 160:
                    cinv = g.inverse_of(c)
                    for t in range(order):
                        if g.orders[t] != 2 or t in n80:
                            continue
                        if g.conjugate_index(c, t) == cinv:
                            comp = g.closure_indices([c, t])
                            if len(comp) == 10 and len(comp & base) == 1:
                                return IsoTag("mu2^4 x| D10", order, {
                                    "normal_subgroup": sorted(base), "rotation": c, "reflection": t,
                                    "complement_order": 10}, stats)
    if order == 144:
        seen = set()
        factors = []
        for cls in conjugacy_class_indices(g):
            x = cls[0]
            if g.orders[x] != 3:
                continue
            nc = g.normal_closure_indices([x])
            if len(nc) == 12 and nc not in seen and _tag_a4(g, nc) is not None:
                seen.add(nc)
                factors.append(nc)
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                f1, f2 = factors[a], factors[b]
                if len(f1 & f2) != 1:
                    continue
                if not all(g.mul_index(x, y) == g.mul_index(y, x) for x in f1 for y in f2):
                    continue
                prod = {g.mul_index(x, y) for x in f1 for y in f2}
                if len(prod) == order:
                    return IsoTag("A4 x A4", order, {"factor_1": sorted(f1), "factor_2": sorted(f2)}, stats)
    return IsoTag("untagged", order, {}, stats)
