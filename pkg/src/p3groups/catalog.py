"""Embedded constants: matrices, polynomials, point lists, line seeds and expected tables.

Every entry carries a location anchor and is parsed into its domain type on
access.  Expected tables are stored exactly as printed; known misprints are
flagged through the ``erratum`` field instead of being silently corrected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .cyclo import parse_cyc
from .group import LINEAR, MatrixGroup, close
from .linalg import Mat
from .poly import HomPoly, parse_poly
from .projgeom import ProjLine, ProjPoint, line_through

KINDS = ("matrix", "polynomial", "point_list", "line_seed", "table", "group_recipe", "word")


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    kind: str
    value: Any
    location: str
    erratum: str | None = None

    def as_dict(self) -> dict:
        out = {"key": self.key, "kind": self.kind, "value": self.value, "location": self.location}
        if self.erratum:
            out["erratum"] = self.erratum
        return out


def _m(prefactor: str, rows: list[str], corrections: list | None = None) -> dict:
    out = {"prefactor": prefactor, "rows": [r.split() for r in rows]}
    if corrections:
        out["corrections"] = corrections
    return out


_P4 = "(x^4+y^4+z^4+w^4)"
_A = "(x^2*y^2+z^2*w^2)"
_B = "(x^2*z^2+y^2*w^2)"
_C = "(x^2*w^2+y^2*z^2)"

_RAW: list[tuple] = [
    # matrices
    ("S1", "matrix", _m("1", ["0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0"]), "Heisenberg generator S1"),
    ("S2", "matrix", _m("1", ["0 1 0 0", "1 0 0 0", "0 0 0 1", "0 0 1 0"]), "Heisenberg generator S2"),
    ("T1", "matrix", _m("1", ["1 0 0 0", "0 1 0 0", "0 0 -1 0", "0 0 0 -1"]), "Heisenberg generator T1"),
    ("T2", "matrix", _m("1", ["1 0 0 0", "0 -1 0 0", "0 0 1 0", "0 0 0 -1"]), "Heisenberg generator T2"),
    ("iI", "matrix", _m("i", ["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"]), "scalar i*I4 extending H"),
    ("S", "matrix", _m("(1+i)/sqrt2", ["i 0 0 0", "0 i 0 0", "0 0 1 0", "0 0 0 1"]),
     "normalizer element S, S^4 = T^5 = -I4"),
    ("T", "matrix", _m("(1+i)/2", ["-i 0 0 i", "0 1 1 0", "1 0 0 1", "0 -i i 0"]),
     "normalizer element T, S^4 = T^5 = -I4"),
    ("A", "matrix", _m("(1+i)/2", ["1 0 0 -1", "0 1 1 0", "0 i -i 0", "i 0 0 -i"], [[3, 0, "-i"]]),
     "matrix A = T^4 S T S",
     "printed entry (4,1) is i, which makes the matrix singular; T^4 S T S gives -i"),
    ("B", "matrix", _m("(1+i)/2", ["-1 i 0 0", "1 i 1 0", "0 0 i -1", "0 0 -i -1"], [[1, 2, "0"]]),
     "matrix B, fifteen-factor word in S and T",
     "printed entry (2,3) is 1, so the matrix does not normalize H; the fifteen-factor word gives 0"),
    ("R", "matrix", _m("1/sqrt2", ["1 i 0 0", "i 1 0 0", "0 0 i 1", "0 0 -1 -i"]),
     "normalizer element R"),
    # words
    ("A-word", "word", "T^4*S*T*S", "A = T^4 S T S"),
    ("B-word", "word", "S*T^4*S*T*S*T^2*S*T^3*S*T*S*T^3*S*T^3*S", "B = S T^4 S T S T^2 S T^3 S T S T^3 S T^3 S"),
    ("S-relation", "word", "S^4", "S^4 = -I4"),
    ("T-relation", "word", "T^5", "T^5 = -I4"),
    # group recipes
    ("H", "group_recipe", ["S1", "S2", "T1", "T2"], "Heisenberg group, |H| = 32"),
    ("HH", "group_recipe", ["S1", "S2", "T1", "T2", "iI"], "<H, iI4>"),
    ("G80", "group_recipe", ["S1", "S2", "T1", "T2", "iI", "T"], "<HH, T>"),
    ("G160", "group_recipe", ["S1", "S2", "T1", "T2", "iI", "T", "R^2"], "<HH, T, R^2>"),
    ("G320", "group_recipe", ["S1", "S2", "T1", "T2", "iI", "T", "R"], "<HH, T, R>"),
    ("G144", "group_recipe", ["S1", "S2", "T1", "T2", "iI", "A", "B"], "<HH, A, B>, order 576"),
    ("N4", "group_recipe", ["S1", "S2", "T1", "T2", "iI", "S", "T"], "<HH, S, T> (normalizer of H)"),
    # polynomials
    ("U4", "polynomial", [_P4, _A, _B, _C, "x*y*z*w"], "HH-invariant quartics U4"),
    ("t0", "polynomial", f"{_P4}/3 - 2*{_A} - 2*{_B} - 2*{_C}", "quartics t0..t5"),
    ("t1", "polynomial", f"{_P4}/3 - 2*{_A} + 2*{_B} + 2*{_C}", "quartics t0..t5"),
    ("t2", "polynomial", f"{_P4}/3 + 2*{_A} - 2*{_B} + 2*{_C}", "quartics t0..t5"),
    ("t3", "polynomial", f"{_P4}/3 + 2*{_A} + 2*{_B} - 2*{_C}", "quartics t0..t5"),
    ("t4", "polynomial", f"-2/3*{_P4} + 8*x*y*z*w", "quartics t0..t5"),
    ("t5", "polynomial", f"-2/3*{_P4} - 8*x*y*z*w", "quartics t0..t5"),
    ("p0", "polynomial", "-1/4*(t0+t2+t5)", "G144 semi-invariants p0..p4"),
    ("p1", "polynomial", "-(xi3*t0 + t2 + xi3^2*t5)", "G144 semi-invariants p0..p4"),
    ("p2", "polynomial", "(xi3+1)*(t0 + xi3^2*t5 + xi3*t2)", "G144 semi-invariants p0..p4"),
    ("p3", "polynomial", "(xi3+1)*(t1 + xi3^2*t4 + xi3*t3)", "G144 semi-invariants p0..p4"),
    ("p4", "polynomial", "-(xi3*t1 + t3 + xi3^2*t4)", "G144 semi-invariants p0..p4"),
    ("p0-square", "polynomial", "(w*y+x*z)^2", "p0 = (wy+xz)^2"),
    ("q0", "polynomial", {"printed": "t0+t1+t2+t3+t4", "corrected": "t0+t1+t2+t4+t5"}, "T-eigenvectors q0..q4",
     "printed sum equals -t5, which T moves; T fixes t3, so the invariant is t0+t1+t2+t4+t5 = -t3, "
     "a multiple of the displayed expansion"),
    ("q1", "polynomial", "xi5^4*t4 + xi5^3*t2 + xi5^2*t5 + xi5*t1 + t0", "T-eigenvectors q0..q4"),
    ("q2", "polynomial", "xi5^4*t5 + xi5^3*t4 + xi5^2*t1 + xi5*t2 + t0", "T-eigenvectors q0..q4"),
    ("q3", "polynomial", "xi5^4*t2 + xi5^3*t1 + xi5^2*t4 + xi5*t5 + t0", "T-eigenvectors q0..q4"),
    ("q4", "polynomial", "xi5^4*t1 + xi5^3*t5 + xi5^2*t2 + xi5*t4 + t0", "T-eigenvectors q0..q4"),
    ("q0-expansion", "polynomial",
     "1/2*(w^4+y^4+z^4+x^4) + 3*x^2*y^2 + 3*z^2*w^2 + 3*x^2*z^2 + 3*y^2*w^2 - 3*x^2*w^2 - 3*y^2*z^2",
     "expanded form of q0"),
    ("Q1", "polynomial", "x^2+y^2+z^2+w^2", "H-invariant quadrics Q1..Q5"),
    ("Q2", "polynomial", "x*w+y*z", "H-invariant quadrics Q1..Q5"),
    ("Q3", "polynomial", "x*z+y*w", "H-invariant quadrics Q1..Q5"),
    ("Q4", "polynomial", "x^2+y^2-z^2-w^2", "H-invariant quadrics Q1..Q5"),
    ("Q5", "polynomial", "x^2-y^2-z^2+w^2", "H-invariant quadrics Q1..Q5"),
    ("Q6", "polynomial", "x^2-y^2+z^2-w^2", "H-invariant quadrics Q6..Q10"),
    ("Q7", "polynomial", "x*y+z*w", "H-invariant quadrics Q6..Q10"),
    ("Q8", "polynomial", "x*y-z*w", "H-invariant quadrics Q6..Q10"),
    ("Q9", "polynomial", "x*z-y*w", "H-invariant quadrics Q6..Q10"),
    ("Q10", "polynomial", "x*w-y*z", "H-invariant quadrics Q6..Q10"),
    ("line-form-minus", "polynomial", "m^4 - (4*xi5^3+4*xi5^2+2)*m^2*l^2 + l^4",
     "restriction of q1, q4 to ell1: mu^4-(4xi^3+4xi^2+2)mu^2+1"),
    ("line-form-plus", "polynomial", "m^4 + (4*xi5^3+4*xi5^2+2)*m^2*l^2 + l^4",
     "restriction of q2, q3 to ell1: mu^4+(4xi^3+4xi^2+2)mu^2+1"),
    # line seeds; each family continues by applying T
    ("ell", "line_seed", ["[0:i:1:0]", "[1:0:0:-i]"], "line ell through [0:i:1:0] and [1:0:0:-i]"),
    ("ell_check", "line_seed", ["[0:-i:1:0]", "[1:0:0:i]"], "line ell-check"),
    ("ell_p", "line_seed", ["[1:0:-i:0]", "[0:1:0:-i]"], "line ell'"),
    ("ell_p_check", "line_seed", ["[1:0:i:0]", "[0:1:0:i]"], "line ell'-check"),
    ("ell_pp", "line_seed", ["[1:i:0:0]", "[0:0:1:-i]"], "line ell''"),
    ("ell_pp_check", "line_seed", ["[1:-i:0:0]", "[0:0:1:i]"], "line ell''-check"),
    # point lists
    ("Sigma20", "point_list", [
        "[i:0:0:1]", "[0:i:1:0]", "[1:0:1:0]", "[0:-1:0:1]", "[1:i:-i:1]",
        "[1:-i:i:1]", "[0:0:-1:1]", "[0:0:1:1]", "[-1:i:-i:1]", "[1:i:i:1]",
        "[-i:0:0:1]", "[0:-i:1:0]", "[1:0:1:0]", "[0:1:0:1]", "[-1:i:i:1]",
        "[1:-i:-i:1]", "[-1:1:0:0]", "[1:1:0:0]", "[-1:-i:i:1]", "[1:-i:-i:1]"],
     "orbit list Sigma20",
     "printed list repeats [1:0:1:0] and [1:-i:-i:1]; the computed orbit is authoritative"),
    ("Sigma20p", "point_list", [
        "[-i:i:-1:1]", "[i:0:1:0]", "[i:i:1:1]", "[0:i:0:1]", "[-1:1:-1:1]",
        "[i:-i:-1:1]", "[1:-1:-1:1]", "[-1:0:0:1]", "[-1:-1:1:1]", "[0:-1:1:0]",
        "[1:0:0:0]", "[1:0:0:1]", "[0:0:0:1]", "[-i:0:1:0]", "[0:0:1:0]",
        "[-i:-i:1:1]", "[0:-i:0:1]", "[1:1:1:1]", "[0:1:1:0]", "[0:1:0:0]"],
     "orbit list Sigma20'"),
    ("Sigma20pp", "point_list", [
        "[i:-1:i:1]", "[0:0:i:1]", "[-i:1:i:1]", "[-i:1:0:0]", "[-i:-1:i:1]",
        "[-i:i:1:1]", "[-i:1:-i:1]", "[i:-i:-1:1]", "[1:-1:1:1]", "[i:-1:-i:1]",
        "[1:-1:-1:1]", "[i:1:0:0]", "[i:1:i:1]", "[i:-i:1:1]", "[-1:1:1:1]",
        "[i:1:-i:1]", "[0:0:-i:1]", "[i:-1:-i:1]", "[i:i:-1:1]", "[1:1:-1:1]"],
     "orbit list Sigma20''",
     "printed list repeats [i:-1:-i:1], and its entries [i:-i:-1:1] and [1:-1:-1:1] lie in Sigma20'; "
     "the computed orbit is authoritative"),
    ("Sigma12", "point_list", [
        "[0:1:0:1]", "[0:-1:0:1]", "[1:i:i:1]", "[1:-i:-i:1]", "[1:-i:i:-1]", "[1:i:-i:-1]",
        "[1:-1:i:-i]", "[1:-1:-i:i]", "[1:1:i:i]", "[1:1:-i:-i]", "[1:0:1:0]", "[1:0:-1:0]"],
     "G144-orbit Sigma12"),
    ("Sigma12p", "point_list", [
        "[1:1:1:1]", "[1:-1:-1:1]", "[1:i:1:-i]", "[1:-i:1:i]", "[1:i:-1:i]", "[1:-i:-1:-i]",
        "[1:0:i:0]", "[1:0:-i:0]", "[0:i:0:1]", "[0:-i:0:1]", "[1:1:-1:-1]", "[1:-1:1:-1]"],
     "G144-orbit Sigma12'"),
    ("Sigma16_1", "point_list",
     ["[(-1+i)*xi5^3+(-1+i)*xi5^2-xi5-1 : 1+(1+i)*xi5^2+xi5 : 1+(1+i)*xi5^3+xi5 : xi5-1]"],
     "representative of the G80-orbit Sigma16^1"),
    ("Sigma16_2", "point_list",
     ["[(1+i)*xi5^3+(1-i)*xi5^2+i*xi5+1 : -2*xi5^3+(-1-i)*xi5^2-xi5-2-i : (-1+i)*xi5^3+i*xi5+i : xi5-1]"],
     "representative of the G80-orbit Sigma16^2"),
    ("Sigma16_3", "point_list",
     ["[-2*i*xi5^3+(1-i)*xi5^2-i*xi5+1-2*i : (1-i)*xi5^3-(1+i)*xi5^2+xi5-i : (1-i)*xi5^3-i*xi5-i : xi5-1]"],
     "representative of the G80-orbit Sigma16^3"),
    ("Sigma16_4", "point_list",
     ["[(-1+i)*xi5^2+i*xi5+i : (1+i)*xi5^3+(1+i)*xi5^2+i*xi5+i : -1+(-1-i)*xi5^3-xi5 : xi5-1]"],
     "representative of the G80-orbit Sigma16^4"),
    # tables
    ("Table1", "table", {
        "columns": [f"Q{k}" for k in range(1, 11)],
        "rows": {
            "ell1": "+---+-+-+-", "ell2": "---++--+-+", "ell3": "--++-++---",
            "ell4": "-++-----++", "ell5": "++---+-+--",
            "ell_check1": "+---+-+-+-", "ell_check2": "---++--+-+", "ell_check3": "--++-++---",
            "ell_check4": "-++-----++", "ell_check5": "++---+-+--",
            "ell_p1": "+----++--+", "ell_p2": "----++--++", "ell_p3": "---+-+-++-",
            "ell_p4": "--+---+++-", "ell_p5": "-+----++-+",
            "ell_p_check1": "+----++--+", "ell_p_check2": "----++--++", "ell_p_check3": "---+-+-++-",
            "ell_p_check4": "--+---+++-", "ell_p_check5": "-+----++-+",
            "ell_pp1": "++-+----+-", "ell_pp2": "+-+-+--+--", "ell_pp3": "-+-++-+---",
            "ell_pp4": "+-++-----+", "ell_pp5": "-++-++----",
            "ell_pp_check1": "++-+----+-", "ell_pp_check2": "+-+-+--+--", "ell_pp_check3": "-+-++-+---",
            "ell_pp_check4": "+-++-----+", "ell_pp_check5": "-++-++----",
        }}, "incidence of the 30 lines with the quadrics Q1..Q10"),
    ("Table2", "table", {
        "columns": ["S1", "S2", "S3", "S4"],
        "rows": {"Sigma16_1": ["Sing", "+", "-", "+"], "Sigma16_2": ["-", "Sing", "+", "+"],
                 "Sigma16_3": ["+", "+", "Sing", "-"], "Sigma16_4": ["+", "-", "+", "Sing"]}},
     "incidence of the G80 quartics S_i = {q_i = 0} with Sigma16^j; contained iff j != 2i mod 5"),
    ("Table144", "table", {
        "columns": ["S1", "S2", "S3", "S4"],
        "rows": {"Sigma16_1": ["-", "+", "+", "+"], "Sigma16_2": ["+", "+", "+", "-"],
                 "Sigma16_3": ["+", "+", "-", "+"], "Sigma16_4": ["+", "-", "+", "+"]}},
     "incidence of the G144 quartics S_i = {p_i = 0} with the length-16 orbits on Q"),
    ("Q144-curves", "table", {
        "S1": ["L4_2", "L4_4"], "S2": ["L4_1", "L4_3"], "S3": ["L4_1", "L4_4"], "S4": ["L4_2", "L4_3"]},
     "S1 cap Q = L4^2 cup L4^4 and its companions"),
    ("Section4-table", "table", {
        "curves": ["L4_1", "L4_2", "L4_3", "L4_4", "L6_1", "L6_2"],
        "cells": {
            "L4_1,L4_2": None, "L4_1,L4_3": "Sigma16_1", "L4_1,L4_4": "Sigma16_2",
            "L4_1,L6_1": None, "L4_1,L6_2": "Sigma24_1",
            "L4_2,L4_3": "Sigma16_3", "L4_2,L4_4": "Sigma16_4", "L4_2,L6_1": None, "L4_2,L6_2": "Sigma24_2",
            "L4_3,L4_4": None, "L4_3,L6_1": "Sigma24_3", "L4_3,L6_2": None,
            "L4_4,L6_1": "Sigma24_4", "L4_4,L6_2": None,
            "L6_1,L6_2": "Sigma36"},
        "orbit_lengths": {"Sigma16": 16, "Sigma24": 24, "Sigma36": 36}},
     "pairwise intersections of the line families L4^k, L6^k on Q"),
    ("Sigma12-incidence", "table", {
        "Sigma12": {"S1": "Sing", "S2": "Sing", "S3": "-", "S4": "-"},
        "Sigma12p": {"S1": "-", "S2": "-", "S3": "Sing", "S4": "Sing"}},
     "Sigma12 in S1 cap S2, Sigma12' in S3 cap S4, both singular loci"),
    ("t-permutations", "table", {
        "T": "(t0 t4 t2 t5 t1)", "-S": "(t0 t1)(t2 t3)(t4 t5)",
        "A": "(t0 t5 t2)(t1 t3 t4)", "B": "(t0 t2 t5)(t1 t3 t4)"},
     "permutation action on t0..t5"),
    ("R-on-quartics", "table", {"S1": "S2", "S2": "S4", "S4": "S3", "S3": "S1"},
     "R(S1)=S2, R(S2)=S4, R(S4)=S3, R(S3)=S1"),
    ("group-orders", "table", {
        "H": {"linear": 32, "projective": 16}, "HH": {"linear": 64, "projective": 16},
        "G80": {"projective": 80}, "G160": {"projective": 160}, "G320": {"projective": 320},
        "G144": {"linear": 576, "projective": 144}},
     "group orders"),
    ("rh-80", "table", {
        "order": 80, "stabilizers": [2, 5], "gmax": 19,
        "rows": [{"g": 5, "a16": 2, "a40": 1}, {"g": 13, "a16": 1, "a40": 3}, {"g": 17, "a16": 3, "a40": 0}]},
     "2g-2 = -160 + 40 a40 + 64 a16"),
    ("rh-144", "table", {
        "order": 144, "stabilizers": [2, 3, 6], "gmax": 13,
        "rows": [{"g": 8, "a24": 0, "a48": 0, "a72": 3}, {"g": 13, "a24": 1, "a48": 2, "a72": 0},
                 {"g": 13, "a24": 2, "a48": 0, "a72": 1}]},
     "2g-2 = -288 + 72 a72 + 96 a48 + 120 a24"),
]

ALIASES = {
    "S0@80": "q0", "S1@80": "q1", "S2@80": "q2", "S3@80": "q3", "S4@80": "q4",
    "S1@144": "p1", "S2@144": "p2", "S3@144": "p3", "S4@144": "p4",
}

_overrides: dict[str, CatalogEntry] = {}


@lru_cache(maxsize=1)
def _entries() -> dict[str, CatalogEntry]:
    out = {}
    for row in _RAW:
        key, kind, value, loc = row[:4]
        erratum = row[4] if len(row) > 4 else None
        if key in out:
            raise CatalogError(f"duplicate catalog key {key}")
        if kind not in KINDS:
            raise CatalogError(f"unknown kind {kind}")
        out[key] = CatalogEntry(key, kind, value, loc, erratum)
    return out


def keys() -> list[str]:
    return list(_entries())


def entry(key: str) -> CatalogEntry:
    key = ALIASES.get(key, key)
    if key in _overrides:
        return _overrides[key]
    try:
        return _entries()[key]
    except KeyError:
        raise CatalogError(f"unknown catalog key {key!r}") from None


class override:
    """Context manager replacing catalog entries, used to inject corrupted data in tests."""

    def __init__(self, **values):
        self.values = values

    def __enter__(self):
        for k, v in self.values.items():
            base = entry(k)
            _overrides[k] = CatalogEntry(base.key, base.kind, v, base.location, base.erratum)
        _clear_caches()
        return self

    def __exit__(self, *exc):
        for k in self.values:
            _overrides.pop(k, None)
        _clear_caches()
        return False


_dependent_caches: list = []


def register_cache(fn):
    """Clear ``fn``'s lru_cache whenever catalog data is overridden; usable as a decorator."""
    _dependent_caches.append(fn)
    return fn


def _clear_caches():
    for fn in (matrix, polynomial, points, line_seed, group, *_dependent_caches):
        fn.cache_clear()


def get(key: str):
    """Parsed value of an entry: Mat, HomPoly (or list), ProjPoint list, ProjLine, dict, or group."""
    e = entry(key)
    try:
        if e.kind == "matrix":
            return matrix(e.key)
        if e.kind == "polynomial":
            return polynomial(e.key)
        if e.kind == "point_list":
            return points(e.key)
        if e.kind == "line_seed":
            return line_seed(e.key)
        if e.kind == "group_recipe":
            return list(e.value)
        if e.kind == "word":
            return evaluate_word(e.value)
        return e.value
    except CatalogError:
        raise
    except Exception as exc:
        raise CatalogError(f"catalog entry {key!r} does not parse: {exc}") from exc


@lru_cache(maxsize=None)
def matrix(key: str, printed: bool = False) -> Mat:
    """The matrix of an entry, with recorded corrections applied unless ``printed``."""
    e = entry(key)
    if e.kind != "matrix":
        raise CatalogError(f"{key} is not a matrix")
    pre = parse_cyc(e.value["prefactor"])
    vals = [[parse_cyc(v) for v in row] for row in e.value["rows"]]
    if not printed:
        for r, col, text in e.value.get("corrections", ()):
            vals[r][col] = parse_cyc(text)
    n = math.lcm(pre.n, *(v.n for r in vals for v in r))
    return Mat(vals, n).scale(pre)


def _factor(token: str) -> Mat:
    token = token.strip()
    neg = token.startswith("-")
    if neg:
        token = token[1:]
    name, _, power = token.partition("^")
    m = matrix(name) ** (int(power) if power else 1)
    return -m if neg else m


def evaluate_word(word: str) -> Mat:
    """Product of catalog matrices written as ``X^a*Y*Z^b`` (empty word is I)."""
    if not word.strip():
        return Mat.identity(4)
    factors = [_factor(t) for t in word.split("*")]
    out = factors[0]
    for f in factors[1:]:
        out = out @ f
    return out


def word_check(key: str) -> bool:
    """True iff the stored matrix equals its defining word exactly."""
    e = entry(key)
    if e.kind != "word":
        raise CatalogError(f"{key} is not a word")
    target = {"A-word": "A", "B-word": "B"}.get(e.key)
    if target is None:
        raise CatalogError(f"{key} has no stored matrix to compare")
    return evaluate_word(e.value) == matrix(target)


@lru_cache(maxsize=None)
def polynomial(key: str):
    e = entry(key)
    if e.kind != "polynomial":
        raise CatalogError(f"{key} is not a polynomial")
    if isinstance(e.value, list):
        return [parse_poly(v) for v in e.value]
    text = e.value["corrected"] if isinstance(e.value, dict) else e.value
    if key.startswith("line-form"):
        return _parse_binary(text)
    names = {}
    for dep in ("t0", "t1", "t2", "t3", "t4", "t5"):
        if dep in text and key != dep:
            names[dep] = polynomial(dep)
    return parse_poly(text, names=names)


def _parse_binary(text: str) -> HomPoly:
    from .cyclo import literal_field_index, parse_expr

    n = literal_field_index(text)
    env = {"l": HomPoly.variable(0, n, 2), "m": HomPoly.variable(1, n, 2)}
    return parse_expr(text, n, env)


@lru_cache(maxsize=None)
def points(key: str) -> list[ProjPoint]:
    e = entry(key)
    if e.kind != "point_list":
        raise CatalogError(f"{key} is not a point list")
    return [ProjPoint.parse(p) for p in e.value]


@lru_cache(maxsize=None)
def line_seed(key: str) -> ProjLine:
    e = entry(key)
    if e.kind != "line_seed":
        raise CatalogError(f"{key} is not a line seed")
    p, q = (ProjPoint.parse(s) for s in e.value)
    return line_through(p, q)


def line_seed_points(key: str) -> tuple[ProjPoint, ProjPoint]:
    e = entry(key)
    p, q = (ProjPoint.parse(s) for s in e.value)
    return p, q


@lru_cache(maxsize=None)
def group(name: str, mode: str = LINEAR) -> MatrixGroup:
    """Close the named generator recipe (H, HH, G80, G160, G320, G144, N4)."""
    e = entry(name)
    if e.kind != "group_recipe":
        raise CatalogError(f"{name} is not a group recipe")
    gens = [evaluate_word(tok) for tok in e.value]
    cap = 20000 if name == "N4" else 10000
    return close(gens, mode, cap=cap, name=name if mode == LINEAR else name + "bar")


def export(key: str | None = None, fmt: str = "text") -> str:
    selected = [entry(key)] if key else [entry(k) for k in keys()]
    if fmt == "json":
        return json.dumps([e.as_dict() for e in selected], indent=2, sort_keys=True)
    lines = []
    for e in selected:
        lines.append(f"{e.key} [{e.kind}] -- {e.location}")
        if e.erratum:
            lines.append(f"  erratum: {e.erratum}")
        lines.append("  " + json.dumps(e.value, sort_keys=True))
    return "\n".join(lines)
