"""Registered checks against the catalog, a runner and report renderers."""

from .registry import CheckResult, list_checks, run_all, run_check
from .report import render, summary, to_json, to_markdown, to_text

__all__ = [
    "CheckResult", "list_checks", "run_all", "run_check",
    "render", "summary", "to_json", "to_markdown", "to_text",
]
