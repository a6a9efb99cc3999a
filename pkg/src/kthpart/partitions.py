"""Partitions into distinct parts, their weighted statistics, and sieves.

Everything here is computed combinatorially (enumeration, sieves, small
dynamic programs) and never touches the series engine, so these values can
serve as independent oracles for generating-function identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import isqrt
from typing import Callable, Iterator, Sequence

from .fps import ZPolynomial

ENUMERATION_CAP = 100


@dataclass(frozen=True)
class DistinctPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x <= 0 for x in p) or any(a >= b for a, b in zip(p, p[1:])):
            raise ValueError(f"not a partition into distinct parts: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def smallest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def largest(self) -> int:
        return self.parts[-1] if self.parts else 0


def _distinct_tuples(n: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    p = lo
    # first part p, remainder uses parts > p, so need n - p == 0 or n - p > p
    while p <= n:
        rest = n - p
        if rest == 0:
            yield (p,)
        elif rest > p:
            for tail in _distinct_tuples(rest, p + 1):
                yield (p,) + tail
        p += 1


class enum_distinct:
    """All partitions of ``n`` into distinct parts, lexicographic on part lists.

    Iterating again starts over.  ``n = 0`` gives the single empty partition.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n

    def __iter__(self) -> Iterator[DistinctPartition]:
        for t in _distinct_tuples(self.n):
            yield DistinctPartition(t)


def s_k(p: DistinctPartition | Sequence[int], k: int) -> int:
    parts = p.parts if isinstance(p, DistinctPartition) else p
    if k <= 0 or len(parts) < k:
        return 0
    return parts[k - 1]


# ---------------------------------------------------------------------------
# weighted statistics


class Convention(Enum):
    SHARP = "sharp"  # sign (-1)^#(pi)
    SHARP_MINUS_ONE = "sharp_minus_one"  # sign (-1)^(#(pi)-1)


@dataclass(frozen=True)
class StatVariant:
    """Which weighted sum over D(n) to compute.

    Build instances with the classmethods; ``tag`` is one of ``FFW_KZ``,
    ``AGL_Z``, ``FFW_C``, ``POWER``, ``TAILS``, ``DIFF``, ``PARITY``.
    ``restricted`` limits ``FFW_KZ(k)`` to partitions with at least k parts.
    """

    tag: str
    k: int = 1
    m: int = 0
    parity: str = ""
    convention: Convention = Convention.SHARP
    restricted: bool = False

    @classmethod
    def ffw_kz(cls, k: int, restricted: bool = False) -> "StatVariant":
        if k < 1:
            raise ValueError("k >= 1")
        return cls("FFW_KZ", k=k, restricted=restricted)

    @classmethod
    def agl_z(cls) -> "StatVariant":
        return cls("AGL_Z")

    @classmethod
    def ffw_c(cls) -> "StatVariant":
        return cls("FFW_C")

    @classmethod
    def power(cls, m: int) -> "StatVariant":
        if m < 0:
            raise ValueError("m >= 0")
        return cls("POWER", m=m)

    @classmethod
    def tails(cls, k: int) -> "StatVariant":
        if k < 1:
            raise ValueError("k >= 1")
        return cls("TAILS", k=k)

    @classmethod
    def diff(cls, k: int) -> "StatVariant":
        if k < 1:
            raise ValueError("k >= 1")
        return cls("DIFF", k=k)

    @classmethod
    def parity_of_smallest(cls, parity: str, convention: Convention) -> "StatVariant":
        if parity not in ("odd", "even"):
            raise ValueError("parity is 'odd' or 'even'")
        return cls("PARITY", parity=parity, convention=convention)

    def weight(self) -> Callable[[tuple[int, ...]], tuple]:
        """Sparse weight: part tuple -> ``((degree, coeff), ...)`` in z."""
        tag, k = self.tag, self.k
        if tag == "FFW_KZ":
            restricted = self.restricted

            def w(p):
                c = -1 if len(p) & 1 else 1
                if len(p) < k:
                    return () if restricted else ((0, c),)
                return ((p[k - 1], c),)

        elif tag == "AGL_Z":

            def w(p):
                c = 1 if len(p) & 1 else -1
                return tuple((i, c) for i in range(p[0]))

        elif tag == "FFW_C":

            def w(p):
                # (-c)^#(pi) s(pi) as a polynomial in c
                return ((len(p), -p[0] if len(p) & 1 else p[0]),)

        elif tag == "POWER":
            m = self.m

            def w(p):
                c = p[0] ** m
                return ((p[0], -c if len(p) & 1 else c),)

        elif tag == "TAILS":

            def w(p):
                if len(p) < k:
                    return ()
                gap = p[k - 1] - (p[k - 2] if k >= 2 else 0)
                c = -1 if len(p) & 1 else 1
                return tuple((i, c) for i in range(gap))

        elif tag == "DIFF":

            def w(p):
                if len(p) < k:
                    return ()
                gap = p[k - 1] - (p[k - 2] if k >= 2 else 0)
                return ((0, -gap if len(p) & 1 else gap),)

        elif tag == "PARITY":
            want = 1 if self.parity == "odd" else 0
            flip = self.convention is Convention.SHARP_MINUS_ONE

            def w(p):
                if p[0] % 2 != want:
                    return ()
                return ((0, -1 if (len(p) & 1) ^ flip else 1),)

        else:
            raise ValueError(f"unknown statistic {tag}")
        return w


def weighted_sum(n: int, weight: Callable[[tuple[int, ...]], tuple]) -> ZPolynomial:
    """Sum ``weight(parts)`` over the partitions of ``n >= 1`` into distinct parts.

    Weights are sparse ``((z-degree, coeff), ...)`` with degree at most ``n``.
    """
    row = [0] * (n + 1)
    for t in _distinct_tuples(n):
        for d, c in weight(t):
            row[d] += c
    return ZPolynomial(row)


def stat_poly(n: int, v: StatVariant) -> ZPolynomial:
    if n < 1:
        raise ValueError("statistics are defined for n >= 1")
    return weighted_sum(n, v.weight())


def weighted_table(
    n_max: int, weight: Callable[[tuple[int, ...]], tuple]
) -> list[ZPolynomial]:
    """``weighted_sum`` for every ``0 <= n <= n_max`` in one depth-first pass.

    Entry 0 is the zero polynomial: all statistics are sums over ``n >= 1``.
    """
    rows = [[0] * (n + 1) for n in range(n_max + 1)]

    def walk(parts: tuple, total: int, nxt: int) -> None:
        for p in range(nxt, n_max - total + 1):
            cur = parts + (p,)
            t = total + p
            row = rows[t]
            for d, c in weight(cur):
                row[d] += c
            if t + p < n_max:
                walk(cur, t, p + 1)

    walk((), 0, 1)
    return [ZPolynomial(r) for r in rows]


@lru_cache(maxsize=256)
def stat_table(v: StatVariant, n_max: int) -> tuple[ZPolynomial, ...]:
    return tuple(weighted_table(n_max, v.weight()))


def ffw_k(n: int, k: int) -> int:
    """``sum over D(n) of (-1)^#(pi) s_k(pi)``; zero for ``n = 0``."""
    if n == 0:
        return 0
    return stat_poly(n, StatVariant.ffw_kz(k)).z_derivative()(1)


def ffw_k_table(k: int, n_max: int) -> list[int]:
    return [p.z_derivative()(1) for p in stat_table(StatVariant.ffw_kz(k), n_max)]


# ---------------------------------------------------------------------------
# sieves and counting


def divisor_count(n: int, k_min: int = 1) -> int:
    """Number of divisors ``d`` of ``n`` with ``d >= k_min``."""
    count = 0
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            if d >= k_min:
                count += 1
            e = n // d
            if e != d and e >= k_min:
                count += 1
    return count


def divisor_table(n_max: int, k_min: int = 1) -> list[int]:
    """``d_{>=k_min}(n)`` for ``0 <= n <= n_max`` (entry 0 is 0)."""
    table = [0] * (n_max + 1)
    for d in range(max(k_min, 1), n_max + 1):
        for m in range(d, n_max + 1, d):
            table[m] += 1
    return table


def divisor_power_table(n_max: int) -> list[ZPolynomial]:
    """``sum_{d | n} z^d`` for ``0 <= n <= n_max``."""
    rows: list[list[int]] = [[] for _ in range(n_max + 1)]
    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            row = rows[m]
            if len(row) <= d:
                row.extend([0] * (d + 1 - len(row)))
            row[d] += 1
    return [ZPolynomial(r) for r in rows]


def parts_lt_count(n: int, k: int) -> int:
    """Partitions of ``n`` into parts from ``{1, ..., k-1}`` (repetition allowed)."""
    return restricted_partition_counts(range(1, k), n)[n]


def restricted_partition_counts(parts, n_max: int, by_length: bool = False) -> list[int]:
    """Partitions of each ``n <= n_max`` into parts from ``parts`` (repeats allowed).

    With ``by_length`` each partition is weighted by its number of parts.
    """
    count = [0] * (n_max + 1)
    count[0] = 1
    lengths = [0] * (n_max + 1)
    for p in parts:
        if p < 1:
            raise ValueError("parts must be positive")
        for t in range(p, n_max + 1):
            count[t] += count[t - p]
            lengths[t] += lengths[t - p] + count[t - p]
    return lengths if by_length else count


def largest_sum_fixed_len(n: int, length: int) -> int:
    """Sum of the largest parts over partitions of ``n`` into exactly ``length`` distinct parts."""
    return sum(t[-1] for t in _distinct_tuples(n) if len(t) == length)


def distinct_count_table(n_max: int) -> list[int]:
    """Number of partitions into distinct parts, by knapsack over parts."""
    table = [0] * (n_max + 1)
    table[0] = 1
    for p in range(1, n_max + 1):
        for t in range(n_max, p - 1, -1):
            table[t] += table[t - p]
    return table


def parity_table(n_max: int, parity: str, convention: Convention) -> list[int]:
    """PARITY statistic for every ``n <= n_max`` without enumeration.

    Conditions on the smallest part ``s``: the rest is a signed count of
    partitions of ``n - s`` into distinct parts larger than ``s``.
    """
    want = 1 if parity == "odd" else 0
    sign0 = 1 if convention is Convention.SHARP_MINUS_ONE else -1
    # above[m] = signed count (-1)^#parts of partitions of m into distinct parts > s
    above = [0] * (n_max + 1)
    above[0] = 1
    out = [0] * (n_max + 1)
    for s in range(n_max, 0, -1):
        if s % 2 == want:
            for n in range(s, n_max + 1):
                out[n] += sign0 * above[n - s]
        # include part s for the next (smaller) smallest-part candidate
        for t in range(n_max, s - 1, -1):
            above[t] -= above[t - s]
    return out


# ---------------------------------------------------------------------------
# closed forms


def pentagonal_index(n: int) -> int | None:
    """Nonzero ``j`` with ``n = j(3j-1)/2``, if any."""
    if n < 1:
        return None
    disc = 1 + 24 * n
    r = isqrt(disc)
    if r * r != disc:
        return None
    if (1 + r) % 6 == 0:
        return (1 + r) // 6
    if (1 - r) % 6 == 0:
        return (1 - r) // 6
    return None


def square_root(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


class ClosedForm(Enum):
    FFW2 = "ffw2"
    FFW3 = "ffw3"
    THM14 = "thm14"
    THM34_PRINTED = "thm34_printed"
    THM37 = "thm37"
    ALLADI = "alladi"
    Z1 = "z1"


def closed_form(n: int, which: ClosedForm, d: Sequence[int] | None = None) -> int:
    """Evaluate one of the closed forms at ``n >= 1``.

    ``d`` may carry a precomputed divisor table covering ``n``.
    """
    if which is ClosedForm.FFW2:
        d = d if d is not None else divisor_table(n)
        return sum(d[1:n]) - d[n] + 1
    if which is ClosedForm.FFW3:
        d = d if d is not None else divisor_table(n)
        head = sum(((n - i - 1) // 2 - 1) * d[i] for i in range(1, n))
        tail = 3 if n % 2 == 0 else 2  # (-1)^n/2 + 5/2
        return -head - d[n] - n + tail
    if which is ClosedForm.THM14:
        j = square_root(n)
        k = pentagonal_index(n)
        if j is not None and k is not None:
            return _sign(k) - _sign(j)
        if j is not None:
            return _sign(j - 1)
        if k is not None:
            return _sign(k)
        return 0
    if which is ClosedForm.THM34_PRINTED:
        # the middle labels are swapped, so only the "both" case can fire
        j = square_root(n)
        k = pentagonal_index(n)
        if j is not None and k is not None:
            return _sign(k) - _sign(j)
        return 0
    if which is ClosedForm.THM37:
        ell = isqrt(n)
        k = pentagonal_index(n)
        return _sign(ell - 1) + (_sign(k) if k is not None else 0)
    if which is ClosedForm.ALLADI:
        j = square_root(n)
        return _sign(j - 1) if j is not None else 0
    if which is ClosedForm.Z1:
        k = pentagonal_index(n)
        return 1 + (_sign(k) if k is not None else 0)
    raise ValueError(which)
