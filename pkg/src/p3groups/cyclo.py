"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as a residue modulo the n-th cyclotomic polynomial in
the power basis 1, z, ..., z^(phi(n)-1), with integer numerators over one
positive common denominator.  Equality is coefficient equality.
"""

from __future__ import annotations

import ast
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class FieldMismatchError(ValueError):
    """Operands live in cyclotomic fields with no declared embedding."""


class CycParseError(ValueError):
    pass


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficients low-to-high
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod_int(p, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(p)


class _Field:
    __slots__ = ("n", "phi", "modulus", "powers", "trace_basis", "_one", "_zero")

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_poly(n)
        self.phi = len(self.modulus) - 1
        powers = []
        cur = [1] + [0] * (self.phi - 1)
        for _ in range(n):
            powers.append(tuple(cur))
            # multiply by z and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(self.phi):
                    cur[j] -= top * self.modulus[j]
        self.powers = tuple(powers)
        # Tr_{Q(z)/Q}(z^k) for the basis powers k < phi
        self.trace_basis = tuple(
            sum(self.powers[(k * j) % n][0] for j in range(n) if math.gcd(j, n) == 1)
            for k in range(self.phi)
        )


@lru_cache(maxsize=None)
def field(n: int) -> _Field:
    if n < 1:
        raise ValueError(f"field index must be positive, got {n}")
    return _Field(n)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_n)."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int, num: Iterable[int], den: int = 1, _reduced: bool = False):
        self.n = n
        if _reduced:
            self.num = tuple(num)
            self.den = den
        else:
            F = field(n)
            num = list(num)
            if len(num) > F.phi:
                num = _reduce_list(num, F)
            num = num + [0] * (F.phi - len(num))
            self.num, self.den = _normalize(num, den)
        self._hash = None

    # construction helpers
    @classmethod
    def rational(cls, q, n: int = 1) -> "CycNum":
        q = Fraction(q)
        phi = field(n).phi
        return cls(n, (q.numerator,) + (0,) * (phi - 1), q.denominator, _reduced=True)

    @classmethod
    def zero(cls, n: int = 1) -> "CycNum":
        return cls(n, (0,) * field(n).phi, 1, _reduced=True)

    @classmethod
    def one(cls, n: int = 1) -> "CycNum":
        return cls.rational(1, n)

    @property
    def phi(self) -> int:
        return len(self.num)

    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def key(self) -> tuple:
        """Canonical, injective dedup key within a fixed field."""
        return (self.n, self.den) + self.num

    def encode(self) -> bytes:
        """Canonical byte encoding of the reduced coefficient sequence."""
        return repr(self.key()).encode()

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # coercion
    def _coerce(self, other) -> tuple["CycNum", "CycNum"]:
        if isinstance(other, CycNum):
            if other.n == self.n:
                return self, other
            if self.n % other.n == 0:
                return self, other.embed(self.n)
            if other.n % self.n == 0:
                return self.embed(other.n), other
            if self.is_rational():
                return CycNum.rational(self.to_fraction(), other.n), other
            if other.is_rational():
                return self, CycNum.rational(other.to_fraction(), self.n)
            raise FieldMismatchError(f"no embedding between Q(zeta_{self.n}) and Q(zeta_{other.n})")
        if isinstance(other, (int, Fraction)):
            return self, CycNum.rational(other, self.n)
        return NotImplemented, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return CycNum(a.n, *_normalize(num, a.den), _reduced=True)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycNum(a.n, *_normalize(num, a.den * b.den), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, tuple(-c for c in self.num), self.den, _reduced=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        F = field(a.n)
        phi = F.phi
        if phi == 1:
            return CycNum(a.n, *_normalize([a.num[0] * b.num[0]], a.den * b.den), _reduced=True)
        bnz = [(j, c) for j, c in enumerate(b.num) if c]
        if not bnz:
            return CycNum.zero(a.n)
        res = [0] * (2 * phi - 1)
        for i, ai in enumerate(a.num):
            if ai:
                for j, bj in bnz:
                    res[i + j] += ai * bj
        return CycNum(a.n, *_normalize(_reduce_list(res, F), a.den * b.den), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        return _inverse_cached(self.n, self.num, self.den)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycNum) and other.n == self.n:
            return self.den == other.den and self.num == other.num
        try:
            a, b = self._coerce(other)
        except FieldMismatchError:
            return False
        if a is NotImplemented:
            return NotImplemented
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        # normalized trace is independent of the ambient field, so values that
        # compare equal across an embedding hash equally
        if self._hash is None:
            tb = field(self.n).trace_basis
            tr = sum(c * t for c, t in zip(self.num, tb))
            self._hash = hash(Fraction(tr, self.den * len(self.num)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # Galois structure
    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism z -> z^k (gcd(k, n) = 1)."""
        if math.gcd(k, self.n) != 1:
            raise ValueError(f"z -> z^{k} is not an automorphism of Q(zeta_{self.n})")
        F = field(self.n)
        out = [0] * F.phi
        for j, c in enumerate(self.num):
            if c:
                for t, p in enumerate(F.powers[(j * k) % self.n]):
                    if p:
                        out[t] += c * p
        return CycNum(self.n, *_normalize(out, self.den), _reduced=True)

    def conjugate(self) -> "CycNum":
        return self.galois(-1 % self.n) if self.n > 2 else self

    def embed(self, m: int) -> "CycNum":
        if m % self.n:
            raise FieldMismatchError(f"Q(zeta_{self.n}) does not embed in Q(zeta_{m})")
        if m == self.n:
            return self
        G = field(m)
        step = m // self.n
        out = [0] * G.phi
        for j, c in enumerate(self.num):
            if c:
                for t, p in enumerate(G.powers[(j * step) % m]):
                    if p:
                        out[t] += c * p
        return CycNum(m, *_normalize(out, self.den), _reduced=True)

    def trace(self) -> Fraction:
        tb = field(self.n).trace_basis
        return Fraction(sum(c * t for c, t in zip(self.num, tb)), self.den)

    def norm(self) -> Fraction:
        prod = CycNum.one(self.n)
        for k in range(1, self.n + 1):
            if math.gcd(k, self.n) == 1:
                prod = prod * self.galois(k % self.n if self.n > 1 else 0)
        return prod.to_fraction()

    def multiplicative_order(self, cap: int = 10000) -> int:
        one = CycNum.one(self.n)
        cur = self
        for k in range(1, cap + 1):
            if cur == one:
                return k
            cur = cur * self
        raise ValueError(f"{self} has no finite order below {cap}")

    def __str__(self):
        return format_cyc(self)

    def __repr__(self):
        return f"CycNum({self.n}, '{format_cyc(self)}')"


def _reduce_list(res: list[int], F: _Field) -> list[int]:
    phi = F.phi
    mod = F.modulus
    for k in range(len(res) - 1, phi - 1, -1):
        c = res[k]
        if c:
            base = k - phi
            for j in range(phi):
                mj = mod[j]
                if mj:
                    res[base + j] -= c * mj
    return res[:phi]


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return q, _poly_trim(a[:db] or [Fraction(0)])


def _poly_mul_q(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_q(a, b):
    m = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (m - len(a))
    b = list(b) + [Fraction(0)] * (m - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=65536)
def _inverse_cached(n: int, num: tuple[int, ...], den: int) -> CycNum:
    # extended Euclid on (a(x), Phi_n(x)) over Q
    a = _poly_trim([Fraction(c, den) for c in num])
    m = [Fraction(c) for c in cyclotomic_poly(n)]
    r0, r1 = m, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while not (len(r1) == 1 and r1[0] == 0):
        q, r = _poly_divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_q(s0, _poly_mul_q(q, s1))
    # r0 is a nonzero constant since Phi_n is irreducible
    g = r0[0]
    coeffs = [c / g for c in s0]
    L = math.lcm(*(c.denominator for c in coeffs))
    return CycNum(n, [int(c * L) for c in coeffs], L)


def root_of_unity(n: int, k: int = 1) -> CycNum:
    """zeta_n^k as a reduced residue in Q(zeta_n)."""
    if n < 1:
        raise ValueError("n must be positive")
    F = field(n)
    return CycNum(n, F.powers[k % n], 1, _reduced=True)


def sqrt2(n: int = 8) -> CycNum:
    """sqrt(2) = zeta_8 + zeta_8^-1, embedded in Q(zeta_n) (8 | n)."""
    return (root_of_unity(8, 1) + root_of_unity(8, 7)).embed(n)


def common_index(*values) -> int:
    n = 1
    for v in values:
        if isinstance(v, CycNum):
            n = math.lcm(n, v.n)
    return n


def to_field(v, n: int) -> CycNum:
    if isinstance(v, CycNum):
        if v.n == n:
            return v
        if n % v.n == 0:
            return v.embed(n)
        if v.is_rational():
            return CycNum.rational(v.to_fraction(), n)
        raise FieldMismatchError(f"Q(zeta_{v.n}) does not embed in Q(zeta_{n})")
    return CycNum.rational(v, n)


# --- text syntax ---------------------------------------------------------


def _fmt_q(c: int, den: int) -> str:
    f = Fraction(c, den)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_cyc(a: CycNum) -> str:
    """Canonical text form, e.g. ``1/2 + -3*z{40}^10``."""
    parts = []
    for k, c in enumerate(a.num):
        if not c:
            continue
        if k == 0:
            parts.append(_fmt_q(c, a.den))
            continue
        q = Fraction(c, a.den)
        mono = f"z{{{a.n}}}^{k}"
        if q == 1:
            parts.append(mono)
        elif q == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_fmt_q(c, a.den)}*{mono}")
    return " + ".join(parts) if parts else "0"


_Z_RE = re.compile(r"z\{\s*(\d+)\s*\}")

# symbolic constants accepted in literals besides z{n}
_CONSTANTS = {
    "i": (4, lambda n: root_of_unity(4, 1).embed(n)),
    "xi3": (3, lambda n: root_of_unity(3, 1).embed(n)),
    "xi5": (5, lambda n: root_of_unity(5, 1).embed(n)),
    "sqrt2": (8, lambda n: sqrt2(n)),
}


def literal_field_index(text: str) -> int:
    """Smallest field index containing every constant mentioned in ``text``."""
    n = 1
    for m in _Z_RE.findall(text):
        n = math.lcm(n, int(m))
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", _Z_RE.sub(" ", text)))
    for name, (idx, _) in _CONSTANTS.items():
        if name in names:
            n = math.lcm(n, idx)
    return n


def _prep(text: str) -> str:
    text = _Z_RE.sub(lambda m: f"z_{m.group(1)}", text)
    return text.replace("^", "**")


class _Evaluator:
    """Evaluates an arithmetic expression tree over a ring.

    ``names`` maps identifiers to ring values; numbers become rationals.
    """

    def __init__(self, n: int, names: dict | None = None):
        self.n = n
        self.names = dict(names or {})

    def lookup(self, name: str):
        if name in self.names:
            return self.names[name]
        m = re.fullmatch(r"z_(\d+)", name)
        if m:
            idx = int(m.group(1))
            if self.n % idx:
                raise CycParseError(f"z{{{idx}}} is not in Q(zeta_{self.n})")
            return root_of_unity(idx, 1).embed(self.n)
        if name in _CONSTANTS:
            idx, make = _CONSTANTS[name]
            if self.n % idx:
                raise CycParseError(f"{name} is not in Q(zeta_{self.n})")
            return make(self.n)
        raise CycParseError(f"unknown symbol {name!r}")

    def eval(self, node):
        if isinstance(node, ast.Expression):
            return self.eval(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return CycNum.rational(node.value, self.n)
        if isinstance(node, ast.Name):
            return self.lookup(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self.eval(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    exp = self.eval(node.right)
                    if not (isinstance(exp, CycNum) and exp.is_rational() and exp.to_fraction().denominator == 1):
                        raise CycParseError("exponents must be integers")
                    k = int(exp.to_fraction())
                else:
                    k = node.right.value
                return self.eval(node.left) ** k
            left, right = self.eval(node.left), self.eval(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if isinstance(right, CycNum):
                    return left * right.inverse()
                raise CycParseError("division only by field elements")
        raise CycParseError(f"unsupported syntax: {ast.dump(node)}")


def parse_expr(text: str, n: int, names: dict | None = None):
    try:
        tree = ast.parse(_prep(text.strip()), mode="eval")
    except SyntaxError as exc:
        raise CycParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _Evaluator(n, names).eval(tree)


def parse_cyc(text: str, n: int | None = None) -> CycNum:
    """Parse a CycNum literal such as ``1/2 + -3*z{40}^10`` or ``(1+i)/2``.

    Without ``n`` the field is the smallest one naming every constant used.
    """
    if n is None:
        n = literal_field_index(text)
    value = parse_expr(text, n)
    if not isinstance(value, CycNum):
        raise CycParseError(f"{text!r} is not a field element")
    return value
