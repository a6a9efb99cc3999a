"""Executable identity checks, the printed-form audit, and asymptotic tables."""

from __future__ import annotations

from .asym import AsymRow, asym_table
from .core import (
    SUITES,
    Expectation,
    IdentityCheck,
    Mismatch,
    Report,
    Side,
    Status,
    UnknownIdentity,
    run_check,
    select,
)
from .registry import lookup, registry


def run(identity: str, order: int) -> Report:
    return run_check(lookup(identity), order)


def run_suite(suite: str, order: int) -> list[Report]:
    """Run every entry of ``suite`` (or ``"all"``) sequentially in registry order."""
    return [run_check(c, order) for c in select(registry(), suite)]


def suite_passes(reports: list[Report]) -> bool:
    return all(r.meets_expectation for r in reports)


def reports_json(suite: str, order: int, reports: list[Report]) -> dict:
    return {"suite": suite, "order": order, "results": [r.to_json() for r in reports]}


__all__ = [
    "SUITES",
    "AsymRow",
    "Expectation",
    "IdentityCheck",
    "Mismatch",
    "Report",
    "Side",
    "Status",
    "UnknownIdentity",
    "asym_table",
    "lookup",
    "registry",
    "reports_json",
    "run",
    "run_suite",
    "suite_passes",
]
