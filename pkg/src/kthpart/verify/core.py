"""Identity checks, reports, and the runner."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Mapping, Sequence

from ..fps import TruncatedSeries, ZPolynomial, first_mismatch


class Expectation(Enum):
    PASS = "pass"
    FAIL_AS_PRINTED = "fail_as_printed"


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"


class UnknownIdentity(KeyError):
    pass


SUITES = ("classical", "lemmas", "core", "general", "tails")


@dataclass(frozen=True)
class Side:
    label: str
    build: Callable[..., TruncatedSeries]
    # built from enumeration, a sieve, or another counting argument
    oracle: bool = False


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    paper_ref: str
    suite: str
    sides: tuple[Side, ...]
    params: tuple[Mapping[str, int], ...] = ({},)
    compare_from: int = 1
    expect: Expectation = Expectation.PASS
    note: str = ""

    def __post_init__(self):
        if len(self.sides) < 2:
            raise ValueError(f"{self.id}: an identity needs at least two sides")
        if self.suite not in SUITES:
            raise ValueError(f"{self.id}: unknown suite {self.suite}")


@dataclass(frozen=True)
class Mismatch:
    n: int
    sides: tuple[str, str]
    lhs: ZPolynomial
    rhs: ZPolynomial
    params: Mapping[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sides": list(self.sides),
            "lhs": self.lhs.to_strings(),
            "rhs": self.rhs.to_strings(),
        }


@dataclass(frozen=True)
class Report:
    id: str
    order: int
    status: Status
    expected: Expectation
    first_mismatch: Mismatch | None
    elapsed: float = field(compare=False)
    paper_ref: str = ""

    @property
    def meets_expectation(self) -> bool:
        if self.expected is Expectation.PASS:
            return self.status is Status.PASS
        return self.status is Status.FAIL and self.first_mismatch is not None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status.value,
            "expected": self.expected.value,
            "first_mismatch": self.first_mismatch.to_json() if self.first_mismatch else None,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


def param_label(params: Mapping[str, int]) -> str:
    if not params:
        return ""
    return "[" + ",".join(f"{k}={v}" for k, v in params.items()) + "]"


def compare_sides(
    check: IdentityCheck, order: int
) -> Mismatch | None:
    """Earliest disagreement over every parameter set and every pair of sides.

    Ties on ``n`` go to the earlier parameter set, then the earlier pair.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    lo = min(check.compare_from, order - 1)
    best: Mismatch | None = None
    for params in check.params:
        built = [(s.label, s.build(order, **params)) for s in check.sides]
        for (la, a), (lb, b) in itertools.combinations(built, 2):
            hit = first_mismatch(a, b, lo)
            if hit is None:
                continue
            n, x, y = hit
            if best is None or n < best.n:
                tag = param_label(params)
                best = Mismatch(n, (la + tag, lb + tag), x, y, dict(params))
    return best


def run_check(check: IdentityCheck, order: int) -> Report:
    t0 = time.perf_counter()
    mm = compare_sides(check, order)
    elapsed = time.perf_counter() - t0
    status = Status.PASS if mm is None else Status.FAIL
    return Report(check.id, order, status, check.expect, mm, elapsed, check.paper_ref)


def select(registry: Sequence[IdentityCheck], suite: str) -> list[IdentityCheck]:
    if suite == "all":
        return list(registry)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c for c in registry if c.suite == suite]
