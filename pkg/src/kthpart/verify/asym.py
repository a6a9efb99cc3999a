"""Exact FFW_k(n) at large n against the leading asymptotic term."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..fps import div_binomial, divisor_series, scale, shift_q, total
from ..partitions import divisor_table


@dataclass(frozen=True)
class AsymRow:
    n: int
    value: int
    main_term: float
    ratio: float


def ffw2_values(n_max: int) -> list[int]:
    """FFW_2(n) for ``0 <= n <= n_max`` from prefix sums of a divisor sieve."""
    d = divisor_table(n_max)
    out = [0] * (n_max + 1)
    prefix = 0
    for n in range(1, n_max + 1):
        out[n] = prefix - d[n] + 1
        prefix += d[n]
    return out


def ffw_values(k: int, n_max: int) -> list[int]:
    """FFW_k(n) for ``0 <= n <= n_max`` as coefficients of the divisor-form series.

    Each ``1/(q;q)_i`` is applied as ``i`` binomial divisions, which keeps
    the cost linear in ``n_max`` per factor.
    """
    if k == 2:
        return ffw2_values(n_max)
    order = n_max + 1
    acc = []
    for i in range(k):
        t = divisor_series(k - i, order)
        for j in range(1, i + 1):
            t = div_binomial(t, 1, 0, j)
        acc.append(scale(shift_q(t, i * (i + 1) // 2), -1 if i % 2 == 0 else 1))
    return total(acc, order).integers()


def main_term(n: int, k: int, proof_normalization: bool = True) -> float:
    f = math.factorial(k - 1)
    denom = f * f if proof_normalization else f
    sign = 1 if k % 2 == 0 else -1
    return sign * n ** (k - 1) * math.log(n) / denom


def sample_points(n_max: int) -> list[int]:
    return sorted({n_max // 10, n_max // 4, n_max // 2, n_max})


def asym_table(k: int, n_max: int, proof_normalization: bool = True) -> list[AsymRow]:
    if k < 2:
        raise ValueError("k >= 2")
    if n_max < 100:
        raise ValueError("n_max >= 100")
    values = ffw_values(k, n_max)
    rows = []
    for n in sample_points(n_max):
        m = main_term(n, k, proof_normalization)
        rows.append(AsymRow(n, values[n], m, float(Fraction(values[n]) / Fraction(m))))
    return rows
