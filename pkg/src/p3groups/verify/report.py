"""Render a list of CheckResults as JSON, Markdown or plain text."""

from __future__ import annotations

import json
from collections import Counter

from .registry import STATUSES, CheckResult


def summary(results: list[CheckResult]) -> dict[str, int]:
    counts = Counter(r.status for r in results)
    return {s: counts.get(s, 0) for s in STATUSES}


def to_json(results: list[CheckResult], with_runtime: bool = True) -> str:
    """Order-stable JSON; with ``with_runtime=False`` two runs give identical bytes."""
    body = {
        "summary": summary(results),
        "checks": [r.as_dict(with_runtime) for r in sorted(results, key=lambda r: r.check_id)],
    }
    return json.dumps(body, indent=2, sort_keys=True, default=str, ensure_ascii=False)


def to_text(results: list[CheckResult]) -> str:
    lines = []
    for r in sorted(results, key=lambda r: r.check_id):
        mark = r.status.upper()
        if r.erratum:
            mark += " (erratum)"
        lines.append(f"{mark:<18} {r.check_id:<32} {r.paper_location}")
        if r.status == "fail" and "diff" in r.evidence:
            lines.append("    diff: " + json.dumps(r.evidence["diff"], sort_keys=True, default=str))
        if r.status == "fail" and "error" in r.evidence:
            lines.append("    error: " + r.evidence["error"])
    s = summary(results)
    lines.append(", ".join(f"{k}={v}" for k, v in s.items()))
    return "\n".join(lines)


def _md_table(head: list[str], rows: list[list[str]]) -> list[str]:
    out = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return out


def _incidence_tables(r: CheckResult) -> list[str]:
    ev = r.evidence
    if r.check_id == "table1-incidence" and isinstance(ev.get("rows"), dict):
        head = ["line"] + [f"Q{k}" for k in range(1, 11)]
        return _md_table(head, [[name] + list(row) for name, row in ev["rows"].items()])
    if r.check_id == "table2-incidence" and isinstance(ev.get("actual"), dict):
        head = [""] + [f"S{i}" for i in range(1, 5)]
        return _md_table(head, [[name] + list(row) for name, row in ev["actual"].items()])
    if r.check_id == "section4-orbit-table" and isinstance(ev.get("sigma16_vs_quartics"), dict):
        head = [""] + [f"S{i}" for i in range(1, 5)]
        return _md_table(head, [[name] + list(row) for name, row in ev["sigma16_vs_quartics"].items()])
    return []


def to_markdown(results: list[CheckResult]) -> str:
    results = sorted(results, key=lambda r: r.check_id)
    s = summary(results)
    out = ["# Verification report", "", " ".join(f"**{k}**: {v}" for k, v in s.items()), ""]
    rows = []
    for r in results:
        status = r.status + (" (erratum)" if r.erratum else "")
        rows.append([f"`{r.check_id}`", status, r.paper_location.replace("|", "\\|"), f"{r.runtime_ms:.0f} ms"])
    out += _md_table(["check", "status", "location", "runtime"], rows)
    for r in results:
        extra = _incidence_tables(r)
        notes = []
        if r.erratum:
            notes.append(f"Erratum: {r.erratum}")
        if r.status == "fail" and "diff" in r.evidence:
            notes.append("Diff: `" + json.dumps(r.evidence["diff"], sort_keys=True, default=str) + "`")
        if extra or notes:
            out += ["", f"## {r.check_id}", ""] + notes + ([""] if notes and extra else []) + extra
    return "\n".join(out) + "\n"


RENDERERS = {"json": to_json, "md": to_markdown, "text": to_text}


def render(results: list[CheckResult], fmt: str) -> str:
    try:
        return RENDERERS[fmt](results)
    except KeyError:
        raise ValueError(f"unknown report format {fmt!r}; choose from {sorted(RENDERERS)}") from None
