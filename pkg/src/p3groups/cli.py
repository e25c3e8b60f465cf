"""Command-line front end.

Exit codes: 0 success, 1 a check failed (or a computation ran out of budget),
2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import __version__, catalog
from .cyclo import CycParseError, format_cyc
from .group import LINEAR, PROJECTIVE
from .ideals import (
    DEFAULT_STEPS, DEGREVLEX, LEX, GroebnerTimeout, degree, groebner, is_irrelevant, jacobian_ideal,
    projective_dimension, step_budget,
)
from .poly import format_poly, invariant_basis, one_dim_multiplicities, parse_poly, semi_invariant_basis
from .projgeom import ProjPoint, orbit
from .rhenum import RHProblem, format_table, solve

OUTPUT_DIR_ENV = "P3GROUPS_OUTPUT_DIR"
GROUPS = ("H", "HH", "G80", "G160", "G320", "G144", "N4")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _field_index(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"field index must be an integer, got {value!r}") from None
    if n < 1 or n > 10_000:
        raise argparse.ArgumentTypeError("field index must lie in 1..10000")
    return n


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _int_list(value: str) -> list[int]:
    try:
        return [int(v) for v in value.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None


def _output_path(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, path: str | None) -> None:
    target = _output_path(path)
    if target is None:
        print(text)
        return
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
    print(f"wrote {target}", file=sys.stderr)


def _check_field(requested: int | None, needed: int) -> int:
    """The field to compute in: ``requested`` if it contains Q(zeta_needed)."""
    if requested is None:
        return needed
    if requested % needed:
        raise UsageError(f"--field {requested} lacks the roots of unity needed here (Q(zeta_{needed}))")
    return requested


# -- commands -------------------------------------------------------------------


def cmd_verify(args) -> int:
    from .verify import list_checks, render, run_all

    checks = list_checks(args.filter)
    if args.strict and not args.include_stretch:
        checks = [c for c in checks if not c.stretch]
    if not checks:
        raise UsageError(f"no check matches {args.filter!r}")
    ids = {c.check_id for c in checks}
    with step_budget(args.steps):
        results = [r for r in run_all(args.filter, jobs=args.jobs) if r.check_id in ids]
    _emit(render(results, args.format), args.output)
    bad = {"fail"} | ({"timeout"} if args.strict else set())
    return EXIT_FAIL if any(r.status in bad for r in results) else EXIT_OK


def cmd_list_checks(args) -> int:
    from .verify import list_checks

    for c in list_checks(args.filter):
        tag = " [stretch]" if c.stretch else ""
        print(f"{c.check_id:<32} {c.section:<10} {c.location}{tag}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    try:
        point = ProjPoint.parse(args.point)
    except (ValueError, CycParseError) as exc:
        raise UsageError(str(exc)) from None
    g = catalog.group(args.group, PROJECTIVE)
    n = _check_field(args.field, math.lcm(g.n, point.n))
    o = orbit(g, point.in_field(n))
    if args.format == "json":
        print(json.dumps({
            "group": args.group, "seed": str(o.seed), "length": len(o),
            "stabilizer_order": o.stabilizer_order, "points": [str(p) for p in o.members],
        }, indent=2))
    else:
        print(f"group {args.group}bar (order {g.order}); orbit length {len(o)}; stabilizer order {o.stabilizer_order}")
        for p in o.members:
            print(f"  {p}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = catalog.group(args.group, LINEAR)
    basis = invariant_basis(g, args.degree)
    rows = []
    for ch, m in one_dim_multiplicities(g, args.degree):
        row = {"trivial": ch.is_trivial(), "multiplicity": m,
               "generator_values": [format_cyc(ch.value(g.find(h))) for h in g.generators]}
        if m:
            row["basis"] = [format_poly(f) for f in semi_invariant_basis(g, args.degree, ch)]
        rows.append(row)
    total = sum(r["multiplicity"] for r in rows)
    if args.format == "json":
        print(json.dumps({
            "group": args.group, "degree": args.degree,
            "invariants": [format_poly(f.normalized()) for f in basis],
            "one_dimensional_multiplicities": rows,
            "total_one_dimensional": total,
        }, indent=2))
        return EXIT_OK
    print(f"{args.group} (order {g.order}), degree {args.degree}: {len(basis)} invariant(s)")
    for f in basis:
        print(f"  {format_poly(f.normalized())}")
    print(f"semi-invariants by one-dimensional character (values on the generators), {total} in total:")
    for r in rows:
        if r["multiplicity"]:
            print(f"  [{', '.join(r['generator_values'])}]  multiplicity {r['multiplicity']}")
            for f in r["basis"]:
                print(f"    {f}")
    return EXIT_OK


def cmd_rh(args) -> int:
    try:
        problem = RHProblem(args.order, frozenset(args.stabs), args.gmax, args.gmin)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sols = solve(problem)
    if args.format == "json":
        print(json.dumps([s.as_dict() for s in sols], indent=2))
    else:
        print(format_table(problem, sols))
    return EXIT_OK


def cmd_groebner(args) -> int:
    polys = []
    try:
        for text in args.poly or []:
            polys.append(parse_poly(text))
        if args.jacobian:
            polys.extend(jacobian_ideal(catalog.get(args.jacobian)).generators)
    except (CycParseError, catalog.CatalogError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if not polys:
        raise UsageError("give at least one --poly or --jacobian")
    try:
        gb = groebner(polys, args.order, steps=args.steps)
    except GroebnerTimeout as exc:
        print(f"budget of {args.steps} reductions exhausted; partial basis has {len(exc.partial)} elements")
        return EXIT_FAIL
    if args.format == "json":
        out = {"order": args.order, "reductions": gb.steps, "basis": [format_poly(f) for f in gb.generators],
               "leading_monomials": [list(m) for m in gb.leading_monomials()]}
        if args.order == DEGREVLEX:
            out.update(projective_dimension=projective_dimension(gb), degree=degree(gb), irrelevant=is_irrelevant(gb))
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"{len(gb.generators)} elements after {gb.steps} reductions")
    for f in gb.generators:
        print(f"  {format_poly(f)}")
    if args.order == DEGREVLEX:
        print(f"projective dimension {projective_dimension(gb)}, degree {degree(gb)}, irrelevant {is_irrelevant(gb)}")
    return EXIT_OK


def cmd_catalog_export(args) -> int:
    try:
        text = catalog.export(args.key, args.format)
    except catalog.CatalogError as exc:
        raise UsageError(str(exc)) from None
    _emit(text, args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p3groups", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run registered checks and print a report")
    v.add_argument("--filter", help="glob over check ids, or over '<section>-<id>' (e.g. '80-*')")
    v.add_argument("--format", choices=("text", "json", "md"), default="text")
    v.add_argument("-o", "--output", help=f"write the report here (relative to ${OUTPUT_DIR_ENV} if set)")
    v.add_argument("--strict", action="store_true", help="timeouts fail; stretch checks are left out")
    v.add_argument("--include-stretch", action="store_true", help="with --strict, keep the stretch checks")
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--steps", type=_positive, default=DEFAULT_STEPS, help="Groebner reduction budget")
    v.set_defaults(func=cmd_verify)

    lc = sub.add_parser("list-checks", help="list registered check ids")
    lc.add_argument("--filter")
    lc.set_defaults(func=cmd_list_checks)

    o = sub.add_parser("orbit", help="orbit and stabilizer of a point")
    o.add_argument("--group", choices=GROUPS, required=True)
    o.add_argument("--point", required=True, help="e.g. '[1:0:1:0]' or '[1:i:xi5:0]'")
    o.add_argument("--field", type=_field_index, help="compute in Q(zeta_n); must contain the needed roots")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_orbit)

    inv = sub.add_parser("invariants", help="invariant basis and one-dimensional character multiplicities")
    inv.add_argument("--group", choices=GROUPS, required=True)
    inv.add_argument("--degree", type=int, choices=range(0, 9), metavar="{0..8}", required=True)
    inv.add_argument("--format", choices=("text", "json"), default="text")
    inv.set_defaults(func=cmd_invariants)

    rh = sub.add_parser("rh", help="enumerate Riemann-Hurwitz solutions")
    rh.add_argument("--order", type=_positive, required=True)
    rh.add_argument("--stabs", type=_int_list, required=True, help="stabilizer orders, e.g. 2,5")
    rh.add_argument("--gmax", type=int, required=True)
    rh.add_argument("--gmin", type=int, default=0)
    rh.add_argument("--format", choices=("text", "json"), default="text")
    rh.set_defaults(func=cmd_rh)

    gb = sub.add_parser("groebner", help="Groebner basis, dimension and degree of an ideal")
    gb.add_argument("--poly", action="append", help="generator in x, y, z, w (repeatable)")
    gb.add_argument("--jacobian", help="add the partial derivatives of a catalog polynomial, e.g. q0")
    gb.add_argument("--order", choices=(DEGREVLEX, LEX), default=DEGREVLEX)
    gb.add_argument("--steps", type=_positive, default=DEFAULT_STEPS)
    gb.add_argument("--format", choices=("text", "json"), default="text")
    gb.set_defaults(func=cmd_groebner)

    cat = sub.add_parser("catalog", help="catalog data")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    ex = cat_sub.add_parser("export", help="export entries as text or JSON")
    ex.add_argument("--key")
    ex.add_argument("--format", choices=("text", "json"), default="text")
    ex.add_argument("-o", "--output")
    ex.set_defaults(func=cmd_catalog_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # anything unexpected is an internal error, not a check failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
