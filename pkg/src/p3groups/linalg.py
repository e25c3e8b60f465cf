"""Dense exact linear algebra over cyclotomic fields."""

from __future__ import annotations

import math
from typing import Sequence

from .cyclo import CycNum, common_index, root_of_unity, to_field


class PreconditionError(ValueError):
    pass


class Mat:
    """Immutable matrix with entries in a single field Q(zeta_n)."""

    __slots__ = ("rows", "cols", "n", "entries", "_key")

    def __init__(self, entries: Sequence[Sequence], n: int | None = None):
        grid = [list(r) for r in entries]
        if not grid or not grid[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(grid[0])
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged matrix")
        if n is None:
            n = common_index(*(v for r in grid for v in r))
        self.n = n
        self.rows = len(grid)
        self.cols = cols
        self.entries = tuple(tuple(to_field(v, n) for v in r) for r in grid)
        self._key = None

    @classmethod
    def identity(cls, size: int, n: int = 1) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int, n: int = 1) -> "Mat":
        return cls([[0] * cols for _ in range(rows)], n)

    @classmethod
    def diag(cls, values: Sequence, n: int | None = None) -> "Mat":
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[CycNum, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[CycNum, ...]:
        return tuple(r[j] for r in self.entries)

    def in_field(self, n: int) -> "Mat":
        return self if n == self.n else Mat(self.entries, n)

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(v.key()[1:] for r in self.entries for v in r)
        return self._key

    def encode(self) -> bytes:
        return repr((self.n, self.rows, self.cols, self.key())).encode()

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.n == other.n:
            return self.key() == other.key()
        return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(tuple(hash(v) for r in self.entries for v in r))

    def _aligned(self, other: "Mat") -> tuple["Mat", "Mat"]:
        n = math.lcm(self.n, other.n)
        return self.in_field(n), other.in_field(n)

    def __add__(self, other: "Mat") -> "Mat":
        a, b = self._aligned(other)
        return Mat([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)], a.n)

    def __sub__(self, other: "Mat") -> "Mat":
        a, b = self._aligned(other)
        return Mat([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)], a.n)

    def __neg__(self) -> "Mat":
        return Mat([[-x for x in r] for r in self.entries], self.n)

    def scale(self, c) -> "Mat":
        n = common_index(c) if isinstance(c, CycNum) else 1
        n = math.lcm(n, self.n)
        c = to_field(c, n)
        m = self.in_field(n)
        return Mat([[c * x for x in r] for r in m.entries], n)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self._aligned(other)
        bcols = [b.column(j) for j in range(b.cols)]
        zero = CycNum.zero(a.n)
        out = []
        for r in a.entries:
            row = []
            for c in bcols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Mat(out, a.n)

    def apply(self, v: Sequence[CycNum]) -> tuple[CycNum, ...]:
        n = math.lcm(self.n, common_index(*v))
        m = self.in_field(n)
        v = [to_field(x, n) for x in v]
        zero = CycNum.zero(n)
        out = []
        for r in m.entries:
            acc = zero
            for x, y in zip(r, v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = Mat.identity(self.rows, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "Mat":
        return Mat([list(self.column(j)) for j in range(self.cols)], self.n)

    def is_identity(self) -> bool:
        return self == Mat.identity(self.rows, self.n)

    def is_scalar(self) -> bool:
        if self.rows != self.cols:
            return False
        d = self.entries[0][0]
        return all(
            (v == d) if i == j else v.is_zero()
            for i, r in enumerate(self.entries)
            for j, v in enumerate(r)
        )

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.entries for v in r)

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in r) for r in self.entries)
        return f"Mat[{self.rows}x{self.cols} over Q(z{self.n})]({body})"


def rref(m: Mat) -> tuple[Mat, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns."""
    grid = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if grid[i][c]), None)
        if p is None:
            continue
        grid[r], grid[p] = grid[p], grid[r]
        inv = grid[r][c].inverse()
        grid[r] = [v * inv if v else v for v in grid[r]]
        for i in range(rows):
            if i != r and grid[i][c]:
                f = grid[i][c]
                grid[i] = [a - f * b if b else a for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
    return Mat(grid, m.n), len(pivots), tuple(pivots)


def rank(m: Mat) -> int:
    return rref(m)[1]


def kernel_basis(m: Mat) -> list[tuple[CycNum, ...]]:
    """Basis of the right kernel {v : m v = 0}, one vector per free column."""
    echelon, rk, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    zero, one = CycNum.zero(m.n), CycNum.one(m.n)
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -echelon[i, f]
        basis.append(tuple(v))
    return basis


def determinant(m: Mat) -> CycNum:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    grid = [list(r) for r in m.entries]
    size = m.rows
    det = CycNum.one(m.n)
    for c in range(size):
        p = next((i for i in range(c, size) if grid[i][c]), None)
        if p is None:
            return CycNum.zero(m.n)
        if p != c:
            grid[c], grid[p] = grid[p], grid[c]
            det = -det
        piv = grid[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, size):
            if grid[i][c]:
                f = grid[i][c] * inv
                grid[i] = [a - f * b if b else a for a, b in zip(grid[i], grid[c])]
    return det


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    size = m.rows
    aug = Mat([list(r) + [1 if i == j else 0 for j in range(size)] for i, r in enumerate(m.entries)], m.n)
    echelon, rk, pivots = rref(aug)
    if pivots[:size] != tuple(range(size)):
        raise ZeroDivisionError("singular matrix")
    return Mat([r[size:] for r in echelon.entries], m.n)


def eigen_lines(m: Mat, order: int) -> list[tuple[CycNum, list[tuple[CycNum, ...]]]]:
    """Eigenspaces of a matrix with m**order = I.

    Candidate eigenvalues are the order-th roots of unity; the raw (unscaled)
    eigenvalues of ``m`` are reported.
    """
    if not (m ** order).is_identity():
        raise PreconditionError(f"matrix does not satisfy m^{order} = I")
    n = math.lcm(m.n, order)
    mm = m.in_field(n)
    ident = Mat.identity(m.rows, n)
    out = []
    for k in range(order):
        lam = root_of_unity(order, k).embed(n)
        ker = kernel_basis(mm - ident.scale(lam))
        if ker:
            out.append((lam, ker))
    if sum(len(b) for _, b in out) != m.rows:
        raise PreconditionError("eigenspaces do not span; matrix is not of the stated order")
    return out
