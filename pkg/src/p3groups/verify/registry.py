"""Check records, the registry and the runner."""

from __future__ import annotations

import fnmatch
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from ..ideals import GroebnerTimeout

STATUSES = ("pass", "fail", "skipped", "timeout")


@dataclass
class Outcome:
    status: str
    evidence: dict
    erratum: str | None = None
    diff: dict | None = None


@dataclass
class CheckResult:
    check_id: str
    paper_location: str
    status: str
    evidence: dict
    runtime_ms: float = field(default=0.0, compare=False)
    erratum: str | None = None
    section: str = ""

    def as_dict(self, with_runtime: bool = True) -> dict:
        out = {
            "check_id": self.check_id,
            "paper_location": self.paper_location,
            "status": self.status,
            "evidence": self.evidence,
        }
        if with_runtime:
            out["runtime_ms"] = round(self.runtime_ms, 1)
        if self.erratum:
            out["erratum"] = self.erratum
        return out


@dataclass(frozen=True)
class Check:
    check_id: str
    location: str
    section: str
    func: Callable[[], Outcome]
    stretch: bool = False

    def matches(self, pattern: str) -> bool:
        return fnmatch.fnmatchcase(self.check_id, pattern) or fnmatch.fnmatchcase(f"{self.section}-{self.check_id}", pattern)


REGISTRY: dict[str, Check] = {}


def register(check_id: str, location: str, section: str, stretch: bool = False):
    def wrap(func):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, location, section, func, stretch)
        return func
    return wrap


def expect(expected, actual, evidence: dict | None = None, erratum: str | None = None) -> Outcome:
    """Pass iff actual equals expected exactly; otherwise fail with both sides in the diff."""
    ev = dict(evidence or {})
    ev.setdefault("expected", expected)
    ev.setdefault("actual", actual)
    if expected == actual:
        return Outcome("pass", ev, erratum)
    return Outcome("fail", ev, erratum, {"expected": expected, "actual": actual})


def all_of(parts: dict[str, bool], evidence: dict | None = None, erratum: str | None = None) -> Outcome:
    ev = dict(evidence or {})
    ev["claims"] = dict(parts)
    failed = sorted(k for k, v in parts.items() if not v)
    if failed:
        return Outcome("fail", ev, erratum, {"failed_claims": failed})
    return Outcome("pass", ev, erratum)


def skipped(note: str) -> Outcome:
    return Outcome("skipped", {"note": note})


def list_checks(pattern: str | None = None) -> list[Check]:
    _load()
    checks = sorted(REGISTRY.values(), key=lambda c: c.check_id)
    if pattern:
        checks = [c for c in checks if c.matches(pattern)]
    return checks


def _load():
    from . import checks  # noqa: F401  (registers on import)


def run_check(check_id: str) -> CheckResult:
    _load()
    if check_id not in REGISTRY:
        raise KeyError(f"unknown check id {check_id!r}")
    check = REGISTRY[check_id]
    start = time.perf_counter()
    try:
        out = check.func()
    except GroebnerTimeout as exc:
        out = Outcome("timeout", {"reductions": exc.steps, "partial_basis_size": len(exc.partial), "message": str(exc)})
    except Exception as exc:  # a crashing check is reported, never aborts the run
        out = Outcome("fail", {"error": f"{type(exc).__name__}: {exc}"})
    elapsed = (time.perf_counter() - start) * 1000
    ev = dict(out.evidence)
    if out.diff is not None:
        ev["diff"] = out.diff
    return CheckResult(check.check_id, check.location, out.status, ev, elapsed, out.erratum, check.section)


def run_all(pattern: str | None = None, jobs: int = 1) -> list[CheckResult]:
    ids = [c.check_id for c in list_checks(pattern)]
    if jobs <= 1:
        return [run_check(i) for i in ids]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_check, ids))
