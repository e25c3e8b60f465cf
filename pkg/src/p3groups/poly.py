"""Homogeneous polynomials over cyclotomic fields and the linear action on them."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Mapping, Sequence

from .cyclo import CycNum, common_index, parse_expr, root_of_unity, to_field, literal_field_index
from .group import GroupElement, MatrixGroup, conjugacy_class_indices, element_order, one_dim_characters
from .linalg import Mat, PreconditionError, kernel_basis, rref
from .projgeom import ProjLine, ProjPoint

VARIABLES = ("x", "y", "z", "w")
BINARY_VARIABLES = ("l", "m")
INVARIANT_CAP = 500


@lru_cache(maxsize=None)
def monomials(degree: int, nvars: int = 4) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given degree, in decreasing lex order."""
    if nvars == 1:
        return ((degree,),)
    out = []
    for a in range(degree, -1, -1):
        for rest in monomials(degree - a, nvars - 1):
            out.append((a,) + rest)
    return tuple(out)


class HomPoly:
    """A homogeneous polynomial in ``nvars`` variables over Q(zeta_n)."""

    __slots__ = ("terms", "degree", "n", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], object], degree: int | None = None,
                 n: int | None = None, nvars: int = 4):
        if n is None:
            n = common_index(*terms.values())
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length")
            c = to_field(c, n)
            if c:
                clean[tuple(e)] = c
        degs = {sum(e) for e in clean}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        if degree is None:
            degree = degs.pop() if degs else 0
        elif degs and degs.pop() != degree:
            raise ValueError("degree does not match terms")
        self.terms = clean
        self.degree = degree
        self.n = n
        self.nvars = nvars

    @classmethod
    def variable(cls, k: int, n: int = 1, nvars: int = 4) -> "HomPoly":
        e = [0] * nvars
        e[k] = 1
        return cls({tuple(e): 1}, 1, n, nvars)

    @classmethod
    def constant(cls, c, n: int = 1, nvars: int = 4) -> "HomPoly":
        return cls({(0,) * nvars: c}, 0, n, nvars)

    @classmethod
    def zero(cls, degree: int, n: int = 1, nvars: int = 4) -> "HomPoly":
        return cls({}, degree, n, nvars)

    @classmethod
    def linear_form(cls, coeffs: Sequence, n: int | None = None) -> "HomPoly":
        nv = len(coeffs)
        if n is None:
            n = common_index(*coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * nv
            e[k] = 1
            terms[tuple(e)] = c
        return cls(terms, 1, n, nv)

    def in_field(self, n: int) -> "HomPoly":
        if n == self.n:
            return self
        return HomPoly({e: to_field(c, n) for e, c in self.terms.items()}, self.degree, n, self.nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: tuple[int, ...]) -> CycNum:
        return self.terms.get(tuple(e), CycNum.zero(self.n))

    def _align(self, other: "HomPoly") -> tuple["HomPoly", "HomPoly"]:
        n = math.lcm(self.n, other.n)
        return self.in_field(n), other.in_field(n)

    def _lift(self, other) -> "HomPoly | None":
        if isinstance(other, HomPoly):
            return other
        if isinstance(other, (int, CycNum)) or hasattr(other, "numerator"):
            return HomPoly.constant(other, common_index(other) if isinstance(other, CycNum) else 1, self.nvars)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return HomPoly(terms, a.degree, a.n, a.nvars)

    __radd__ = __add__

    def __neg__(self):
        return HomPoly({e: -c for e, c in self.terms.items()}, self.degree, self.n, self.nvars)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "HomPoly":
        n = math.lcm(self.n, common_index(c) if isinstance(c, CycNum) else 1)
        c = to_field(c, n)
        if not c:
            return HomPoly.zero(self.degree, n, self.nvars)
        return HomPoly({e: c * v for e, v in self.in_field(n).terms.items()}, self.degree, n, self.nvars)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            a, b = self._align(other)
            terms: dict = {}
            for e1, c1 in a.terms.items():
                for e2, c2 in b.terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    prod = c1 * c2
                    terms[e] = terms[e] + prod if e in terms else prod
            return HomPoly(terms, a.degree + b.degree, a.n, a.nvars)
        if isinstance(other, (int, CycNum)) or hasattr(other, "numerator"):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, HomPoly):
            if other.degree != 0 or other.is_zero():
                raise ValueError("can only divide by a nonzero constant")
            other = other.coefficient((0,) * other.nvars)
        if isinstance(other, int):
            other = CycNum.rational(other)
        return self.scale(other.inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = HomPoly.constant(1, self.n, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, HomPoly):
            if self.nvars != other.nvars:
                return False
            if self.is_zero() and other.is_zero():
                return True
            if self.degree != other.degree:
                return False
            a, b = self._align(other)
            return a.terms == b.terms
        if isinstance(other, (int, CycNum)):
            return self == HomPoly.constant(other, self.n, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def leading_lex(self) -> tuple[int, ...] | None:
        return max(self.terms) if self.terms else None

    def normalized(self) -> "HomPoly":
        """Scaled so the lexicographically greatest monomial has coefficient 1."""
        if self.is_zero():
            return self
        return self.scale(self.terms[self.leading_lex()].inverse())

    def proportional_to(self, other: "HomPoly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    def evaluate(self, point: Sequence) -> CycNum:
        n = math.lcm(self.n, common_index(*point))
        vals = [to_field(v, n) for v in point]
        acc = CycNum.zero(n)
        for e, c in self.terms.items():
            t = c.embed(n) if c.n != n else c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            acc = acc + t
        return acc

    def derivative(self, k: int) -> "HomPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                terms[tuple(ne)] = c * e[k]
        return HomPoly(terms, max(self.degree - 1, 0), self.n, self.nvars)

    def coefficient_vector(self, n: int | None = None) -> list[CycNum]:
        n = self.n if n is None else n
        zero = CycNum.zero(n)
        return [to_field(self.terms[e], n) if e in self.terms else zero for e in monomials(self.degree, self.nvars)]

    @classmethod
    def from_vector(cls, vec: Sequence[CycNum], degree: int, n: int, nvars: int = 4) -> "HomPoly":
        return cls(dict(zip(monomials(degree, nvars), vec)), degree, n, nvars)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"HomPoly({format_poly(self)})"


def format_poly(f: HomPoly) -> str:
    names = VARIABLES if f.nvars == 4 else BINARY_VARIABLES if f.nvars == 2 else [f"v{k}" for k in range(f.nvars)]
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(names, e) if k)
        cs = str(c)
        if not mono:
            parts.append(f"({cs})" if " " in cs else cs)
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"({cs})*{mono}" if " " in cs or "z" in cs else f"{cs}*{mono}")
    return " + ".join(parts)


def parse_poly(text: str, n: int | None = None, names: Mapping[str, HomPoly] | None = None) -> HomPoly:
    """Parse sums of ``coeff*x^a*y^b*z^c*w^d`` with cyclotomic literal coefficients.

    ``names`` supplies further polynomial symbols (catalog entries).
    """
    idx = literal_field_index(text)
    extra = dict(names or {})
    for v in extra.values():
        idx = math.lcm(idx, v.n)
    if n is None:
        n = idx
    env = {v: HomPoly.variable(k, n) for k, v in enumerate(VARIABLES)}
    env.update(extra)
    value = parse_expr(text.replace("−", "-"), n, env)
    if isinstance(value, CycNum):
        value = HomPoly.constant(value, n)
    return value.in_field(math.lcm(n, value.n))


# --- group action -----------------------------------------------------------


def _is_monomial_matrix(m: Mat) -> bool:
    return all(sum(1 for v in r if v) == 1 for r in m.entries)


def act(g: GroupElement | Mat, f: HomPoly) -> HomPoly:
    """Substitution action: act(g, f)(v) = f(M v).

    This is a right action: act(gh, f) = act(h, act(g, f)).
    """
    m = g.matrix if isinstance(g, GroupElement) else g
    n = math.lcm(m.n, f.n)
    m = m.in_field(n)
    f = f.in_field(n)
    if _is_monomial_matrix(m):
        # x_j -> c_j * x_{s(j)}
        perm = []
        for r in m.entries:
            k = next(k for k, v in enumerate(r) if v)
            perm.append((k, r[k]))
        terms: dict = {}
        for e, c in f.terms.items():
            ne = [0] * 4
            coef = c
            for j, ej in enumerate(e):
                if ej:
                    k, cj = perm[j]
                    ne[k] += ej
                    coef = coef * cj ** ej
            ne = tuple(ne)
            terms[ne] = terms[ne] + coef if ne in terms else coef
        return HomPoly(terms, f.degree, n)
    forms = [HomPoly.linear_form(r, n) for r in m.entries]
    powers = [[HomPoly.constant(1, n)] for _ in range(4)]
    result = HomPoly.zero(f.degree, n)
    for e, c in f.terms.items():
        term = HomPoly.constant(c, n)
        for j, ej in enumerate(e):
            while len(powers[j]) <= ej:
                powers[j].append(powers[j][-1] * forms[j])
            if ej:
                term = term * powers[j][ej]
        result = result + term
    return result


def action_matrix(g: GroupElement | Mat, degree: int, n: int | None = None) -> Mat:
    """Matrix of f -> act(g, f) on the monomial basis (columns are images)."""
    m = g.matrix if isinstance(g, GroupElement) else g
    n = m.n if n is None else math.lcm(n, m.n)
    basis = monomials(degree)
    cols = [act(m, HomPoly({e: 1}, degree, n)).coefficient_vector(n) for e in basis]
    return Mat([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))], n)


def _monomial_subgroup(g: MatrixGroup) -> tuple[list[int], list[int]]:
    """Indices of monomial elements and right coset representatives for them."""
    sub = [i for i, e in enumerate(g.elements) if _is_monomial_matrix(e.matrix)]
    covered = set()
    reps = []
    for t in range(g.order):
        if t in covered:
            continue
        reps.append(t)
        for h in sub:
            covered.add(g.mul_index(h, t))
    return sub, reps


def reynolds(g: MatrixGroup, f: HomPoly, _split=None) -> HomPoly:
    """Average of act(h, f) over the group.

    The sum is taken as sum over cosets N t of act(t, sum over N of act(h, f)),
    where N is the subgroup of monomial matrices, whose action is cheap.
    """
    sub, reps = _split if _split is not None else _monomial_subgroup(g)
    inner = HomPoly.zero(f.degree, math.lcm(f.n, g.n))
    for h in sub:
        inner = inner + act(g.elements[h], f)
    total = HomPoly.zero(f.degree, inner.n)
    for t in reps:
        total = total + act(g.elements[t], inner)
    return total / g.order


def invariant_basis(g: MatrixGroup, degree: int) -> list[HomPoly]:
    """Basis of the invariant polynomials of the given degree, in reduced echelon form."""
    basis = monomials(degree)
    if len(basis) > INVARIANT_CAP:
        raise PreconditionError("degree too large for invariant computation")
    n = g.n
    split = _monomial_subgroup(g)
    rows = []
    seen = set()
    for e in basis:
        avg = reynolds(g, HomPoly({e: 1}, degree, n), split)
        if avg.is_zero():
            continue
        key = frozenset(avg.normalized().terms.items())
        if key in seen:
            continue
        seen.add(key)
        rows.append(avg.coefficient_vector(n))
    if not rows:
        return []
    echelon, rk, _ = rref(Mat(rows, n))
    out = [HomPoly.from_vector(echelon.row(i), degree, n) for i in range(rk)]
    for f in out:
        for h in g.generators:
            if act(h, f) != f:
                raise RuntimeError("averaged polynomial is not invariant")
    return out


def fixed_space_dimension(g: MatrixGroup, degree: int) -> int:
    """Dimension of the invariants as the common fixed space of the generators."""
    size = len(monomials(degree))
    rows = []
    for h in g.generators:
        a = action_matrix(h, degree, g.n)
        d = a - Mat.identity(size, a.n)
        rows.extend(d.entries)
    n = math.lcm(*(r[0].n for r in rows))
    return len(kernel_basis(Mat(rows, n)))


def semi_invariant_basis(g: MatrixGroup, degree: int, character) -> list[HomPoly]:
    """Polynomials f with act(h, f) = character(h) * f for every generator h."""
    size = len(monomials(degree))
    n = math.lcm(g.n, character.exponent)
    rows = []
    for h in g.generators:
        a = action_matrix(h, degree, n)
        d = a - Mat.identity(size, a.n).scale(character.value(g.find(h), a.n))
        rows.extend(d.entries)
    out = [HomPoly.from_vector(v, degree, n).normalized() for v in kernel_basis(Mat(rows, n))]
    for f in out:
        for h in g.generators:
            if act(h, f) != f.scale(character.value(g.find(h), f.n)):
                raise RuntimeError("kernel vector is not a semi-invariant")
    return out


def symmetric_power_trace(m: Mat, degree: int) -> CycNum:
    """Trace of f -> f(M v) on degree-d polynomials, read from diagonal coefficients.

    Images of monomials are built incrementally: image(x^e) = image(x^e / x_j) * L_j
    with L_j the j-th row of M as a linear form.
    """
    n = m.n
    if degree == 0:
        return CycNum.one(n)
    forms = [HomPoly.linear_form(r, n) for r in m.entries]
    images = {(0, 0, 0, 0): HomPoly.constant(1, n)}
    trace = CycNum.zero(n)
    for d in range(1, degree + 1):
        nxt = {}
        for e in monomials(d):
            j = next(k for k, v in enumerate(e) if v)
            prev = list(e)
            prev[j] -= 1
            img = images[tuple(prev)] * forms[j]
            nxt[e] = img
            if d == degree:
                trace = trace + img.coefficient(e)
        images = nxt
    return trace


def symmetric_power_trace_newton(m: Mat, degree: int) -> CycNum:
    """Same trace via power sums p_k = tr(M^k) and h_d = (1/d) sum p_k h_(d-k)."""
    n = m.n
    p = [None]
    cur = m
    for _ in range(degree):
        p.append(sum((cur[i, i] for i in range(m.rows)), CycNum.zero(n)))
        cur = cur @ m
    h = [CycNum.one(n)]
    for d in range(1, degree + 1):
        acc = CycNum.zero(n)
        for k in range(1, d + 1):
            acc = acc + p[k] * h[d - k]
        h.append(acc / d)
    return h[degree]


def one_dim_multiplicities(g: MatrixGroup, degree: int, characters=None) -> list[tuple[object, int]]:
    """Multiplicity of every one-dimensional character in the degree-d polynomials.

    Returns (character, multiplicity) pairs in the order of ``one_dim_characters``.
    """
    chars = characters if characters is not None else one_dim_characters(g)
    classes = conjugacy_class_indices(g)
    e = chars[0].exponent if chars else 1
    n = math.lcm(g.n, e)
    traces = [symmetric_power_trace(g.elements[cls[0]].matrix, degree).embed(n) for cls in classes]
    out = []
    for ch in chars:
        acc = CycNum.zero(n)
        for cls, tr in zip(classes, traces):
            acc = acc + tr * ch.value(cls[0], n).conjugate() * len(cls)
        acc = acc / g.order
        if not acc.is_rational() or acc.to_fraction().denominator != 1 or acc.to_fraction() < 0:
            raise RuntimeError(f"character multiplicity {acc} is not a non-negative integer")
        out.append((ch, int(acc.to_fraction())))
    return out


# --- semi-invariant eigenbases -------------------------------------------------


def _coordinates(span_rows: Mat, pivots: Sequence[int], f: HomPoly) -> list[CycNum] | None:
    """Coordinates of f in an echelon basis, or None if f is outside the span."""
    vec = f.coefficient_vector(span_rows.n)
    coords = [vec[p] for p in pivots]
    recon = [sum((c * span_rows[i, j] for i, c in enumerate(coords)), CycNum.zero(span_rows.n))
             for j in range(span_rows.cols)]
    return coords if recon == vec else None


def semi_invariant_eigenbasis(polys: Sequence[HomPoly], elements: Sequence[GroupElement]) -> list[tuple[tuple[CycNum, ...], HomPoly]]:
    """Simultaneous eigenvectors of commuting elements acting on span(polys).

    Each eigenvector is normalized so its lexicographically greatest monomial
    has coefficient 1; eigenvalues are listed per element.
    """
    degree = polys[0].degree
    n = math.lcm(*(p.n for p in polys), *(e.n for e in elements))
    echelon, rk, pivots = rref(Mat([p.in_field(n).coefficient_vector(n) for p in polys], n))
    span = Mat(echelon.entries[:rk], n)
    basis = [HomPoly.from_vector(span.row(i), degree, n) for i in range(rk)]
    ops = []
    for g in elements:
        cols = []
        for b in basis:
            c = _coordinates(span, pivots, act(g, b))
            if c is None:
                raise PreconditionError("span is not stable under the action")
            cols.append(c)
        ops.append(Mat([[cols[j][i] for j in range(rk)] for i in range(rk)], n))
    for a in ops:
        for b in ops:
            if a @ b != b @ a:
                raise PreconditionError("action elements do not commute on the span")
    orders = [element_order(GroupElement(op)) for op in ops]
    m = math.lcm(n, *orders)
    ops = [op.in_field(m) for op in ops]
    span = span.in_field(m)
    ident = Mat.identity(rk, m)
    # split the space one operator at a time
    pieces = [((), [tuple(CycNum.one(m) if i == j else CycNum.zero(m) for j in range(rk)) for i in range(rk)])]
    for op, order in zip(ops, orders):
        nxt = []
        for labels, vecs in pieces:
            sub = Mat([list(v) for v in vecs], m).transpose()  # columns span the piece
            for k in range(order):
                lam = root_of_unity(order, k).embed(m)
                # solve (op - lam) sub c = 0
                ker = kernel_basis((op - ident.scale(lam)) @ sub)
                if ker:
                    new_vecs = [sub.apply(c) for c in ker]
                    nxt.append((labels + (lam,), new_vecs))
        pieces = nxt
    if sum(len(v) for _, v in pieces) != rk:
        raise RuntimeError("action is not diagonalizable on the span")
    out = []
    for labels, vecs in pieces:
        for v in vecs:
            coeffs = [sum((c * span[i, j] for i, c in enumerate(v)), CycNum.zero(m)) for j in range(span.cols)]
            out.append((labels, HomPoly.from_vector(coeffs, degree, m).normalized()))
    return out


# --- lines and singularities --------------------------------------------------


def restrict_to_line(f: HomPoly, line: ProjLine, basis: tuple[ProjPoint, ProjPoint]) -> HomPoly:
    """f(l*p + m*q) as a binary form in (l, m)."""
    p, q = basis
    if not (line.contains(p) and line.contains(q)):
        raise PreconditionError("basis point is not on the line")
    if p == q:
        raise PreconditionError("basis points must be distinct")
    n = math.lcm(f.n, p.n, q.n)
    forms = [HomPoly.linear_form([a, b], n) for a, b in zip(p.in_field(n).coords, q.in_field(n).coords)]
    return substitute(f, forms)


def substitute(f: HomPoly, forms: Sequence[HomPoly]) -> HomPoly:
    """f(forms[0], ..., forms[k]) for linear forms sharing one set of variables."""
    if len(forms) != f.nvars:
        raise PreconditionError(f"need {f.nvars} forms, got {len(forms)}")
    n = math.lcm(f.n, *(g.n for g in forms))
    forms = [g.in_field(n) for g in forms]
    nv = forms[0].nvars
    result = HomPoly.zero(f.degree, n, nv)
    for e, c in f.terms.items():
        term = HomPoly.constant(c, n, nv)
        for j, ej in enumerate(e):
            if ej:
                term = term * forms[j] ** ej
        result = result + term
    return result


def line_in_surface(line: ProjLine, f: HomPoly) -> bool:
    return restrict_to_line(f, line, line.points()).is_zero()


def jacobian(f: HomPoly) -> tuple[HomPoly, ...]:
    return tuple(f.derivative(k) for k in range(f.nvars))


def euler_defect(f: HomPoly) -> HomPoly:
    """sum x_k d f/d x_k - deg(f) f, which vanishes identically."""
    acc = f.scale(-f.degree)
    for k, d in enumerate(jacobian(f)):
        acc = acc + HomPoly.variable(k, f.n, f.nvars) * d
    return acc


def is_singular_at(f: HomPoly, p: ProjPoint) -> bool:
    if f.evaluate(p.coords):
        raise PreconditionError(f"point {p} is not on the surface")
    return all(not d.evaluate(p.coords) for d in jacobian(f))


def on_surface(f: HomPoly, p: ProjPoint) -> bool:
    return not f.evaluate(p.coords)
