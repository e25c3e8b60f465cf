"""Enumerate Riemann-Hurwitz solutions for a finite group acting on a curve."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class RHProblem:
    group_order: int
    stabilizer_orders: frozenset[int]
    genus_max: int
    genus_min: int = 0

    def __post_init__(self):
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        bad = [s for s in self.stabilizer_orders if s <= 1 or self.group_order % s]
        if bad:
            raise ValueError(f"stabilizer orders {bad} must exceed 1 and divide {self.group_order}")
        if not 0 <= self.genus_max <= 100:
            raise ValueError("genus_max must lie in 0..100")
        object.__setattr__(self, "stabilizer_orders", frozenset(self.stabilizer_orders))

    @property
    def orbit_lengths(self) -> tuple[int, ...]:
        """Short-orbit lengths in increasing order."""
        return tuple(sorted(self.group_order // s for s in self.stabilizer_orders))


@dataclass(frozen=True)
class RHSolution:
    g: int
    quotient_genus: int
    counts: tuple[tuple[int, int], ...]  # (orbit length, number of orbits)

    def count(self, length: int) -> int:
        return dict(self.counts).get(length, 0)

    def as_dict(self) -> dict:
        out = {"g": self.g, "quotient_genus": self.quotient_genus}
        out.update({f"a{length}": k for length, k in self.counts})
        return out


def satisfies(problem: RHProblem, sol: RHSolution) -> bool:
    order = problem.group_order
    rhs = order * (2 * sol.quotient_genus - 2) + sum(k * (order - length) for length, k in sol.counts)
    return 2 * sol.g - 2 == rhs and all(k >= 0 for _, k in sol.counts) and sol.quotient_genus >= 0


def _sort_key(sol: RHSolution):
    return (sol.g, sol.quotient_genus, tuple(k for _, k in sol.counts))


def solve(problem: RHProblem) -> list[RHSolution]:
    """All (g, quotient genus, orbit counts) with genus_min <= g <= genus_max."""
    order = problem.group_order
    lengths = problem.orbit_lengths
    top = 2 * problem.genus_max - 2
    out = []
    for qg in itertools.count():
        base = order * (2 * qg - 2)
        if base > top:
            break
        _fill(problem, lengths, 0, base, [], qg, top, out)
    out.sort(key=_sort_key)
    return out


def _fill(problem, lengths, k, acc, counts, qg, top, out):
    if k == len(lengths):
        if acc % 2:
            return
        g = (acc + 2) // 2
        if problem.genus_min <= g <= problem.genus_max:
            out.append(RHSolution(g, qg, tuple(zip(lengths, counts))))
        return
    step = problem.group_order - lengths[k]
    a = 0
    while acc + a * step <= top:
        _fill(problem, lengths, k + 1, acc + a * step, counts + [a], qg, top, out)
        a += 1


def brute_force(problem: RHProblem, count_max: int | None = None, quotient_max: int | None = None) -> list[RHSolution]:
    """Grid search over quotient genus and orbit counts, used as an independent oracle."""
    order = problem.group_order
    lengths = problem.orbit_lengths
    if count_max is None:
        steps = [order - length for length in lengths]
        count_max = (2 * problem.genus_max + 2 * order) // min(steps) if steps else 0
    if quotient_max is None:
        quotient_max = problem.genus_max + 1
    out = []
    for qg in range(quotient_max + 1):
        for counts in itertools.product(range(count_max + 1), repeat=len(lengths)):
            total = order * (2 * qg - 2) + sum(c * (order - length) for c, length in zip(counts, lengths))
            if total % 2:
                continue
            g = (total + 2) // 2
            if problem.genus_min <= g <= problem.genus_max:
                out.append(RHSolution(g, qg, tuple(zip(lengths, counts))))
    out.sort(key=_sort_key)
    return out


def format_table(problem: RHProblem, solutions: list[RHSolution]) -> str:
    lengths = problem.orbit_lengths
    head = ["g", "g_quot"] + [f"a{length}" for length in lengths]
    rows = [head] + [[str(s.g), str(s.quotient_genus)] + [str(s.count(length)) for length in lengths] for s in solutions]
    widths = [max(len(r[k]) for r in rows) for k in range(len(head))]
    return "\n".join("  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in rows)
