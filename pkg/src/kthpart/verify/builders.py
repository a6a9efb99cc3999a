"""Series builders for the identity registry.

Every builder takes the truncation order first and integer parameters as
keywords, and returns a ``TruncatedSeries``.  Infinite sums go through
``qsum``, which stops once the stated valuation bound of the next term
reaches the order and asserts that bound on every term it adds.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterator

from ..fps import (
    INFINITE,
    PochSpec,
    ThetaKind,
    TruncatedSeries,
    ZPolynomial,
    div_binomial,
    divisor_series,
    dz,
    exact_div_one_minus_z,
    from_integers,
    geometric,
    inv_pochhammer,
    inv_qpoch,
    invert,
    mul,
    mul_binomial,
    mul_z,
    neg,
    one,
    pochhammer,
    q_binomial,
    qpoch,
    scale,
    shift_q,
    sub,
    subst_z,
    theta,
    total,
    valuation,
    zero,
)
from ..partitions import (
    ENUMERATION_CAP,
    ClosedForm,
    Convention,
    StatVariant,
    closed_form,
    divisor_power_table,
    divisor_table,
    parity_table,
    restricted_partition_counts,
    stat_table,
    weighted_table,
)

Term = Callable[[int], TruncatedSeries]


class ValuationBoundViolated(AssertionError):
    pass


def qsum(term: Term, start: int, bound: Callable[[int], int], order: int) -> TruncatedSeries:
    """``sum_{i >= start} term(i)`` for the ``i`` with ``bound(i) < order``.

    ``bound`` must be nondecreasing from ``start`` on and a lower bound for
    the q-valuation of ``term(i)``; the second condition is checked.
    """
    terms = []
    i = start
    while bound(i) < order:
        t = term(i)
        if valuation(t) < bound(i):
            raise ValuationBoundViolated(f"term {i} starts below q^{bound(i)}")
        terms.append(t)
        i += 1
    return total(terms, order)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def tri(n: int) -> int:
    return n * (n + 1) // 2


# ---------------------------------------------------------------------------
# shared pieces


def tail(n: int, order: int) -> TruncatedSeries:
    """``(q^n; q)_inf`` for ``n >= 1``."""
    return pochhammer(PochSpec(qpow=n), order)


def tail_minus_one(n: int, order: int) -> TruncatedSeries:
    return sub(tail(n, order), one(order))


def lambert(m: int, order: int) -> TruncatedSeries:
    """``q^m / (1 - q^m)``."""
    return shift_q(geometric(0, m, order), m)


def dsum(order: int) -> TruncatedSeries:
    return divisor_series(1, order)


def qbin_in_n(k: int, n0: int, order: int) -> Iterator[tuple[int, TruncatedSeries]]:
    """``(n, [n, k])`` for ``n = n0, n0+1, ...`` by the ratio ``(1-q^n)/(1-q^(n-k))``."""
    n = max(n0, k)
    cur = q_binomial(n, k, order)
    for m in range(n0, n):
        yield m, zero(order)
    while True:
        yield n, cur
        n += 1
        cur = div_binomial(mul_binomial(cur, 1, 0, n), 1, 0, n - k) if k else cur


def qbin_diag(N: int, order: int) -> Iterator[TruncatedSeries]:
    """``[N + j - 1, j]`` for ``j = 0, 1, ...``."""
    cur = one(order)
    j = 0
    while True:
        yield cur
        j += 1
        cur = div_binomial(mul_binomial(cur, 1, 0, N + j - 1), 1, 0, j)


def indexed_sum(
    items: Iterator[tuple[int, TruncatedSeries]],
    term: Callable[[int, TruncatedSeries], TruncatedSeries],
    bound: Callable[[int], int],
    order: int,
) -> TruncatedSeries:
    """Like ``qsum`` but feeding an incrementally built factor to ``term``."""
    terms = []
    for i, f in items:
        if bound(i) >= order:
            break
        t = term(i, f)
        if valuation(t) < bound(i):
            raise ValuationBoundViolated(f"term {i} starts below q^{bound(i)}")
        terms.append(t)
    return total(terms, order)


def halve(a: TruncatedSeries) -> TruncatedSeries:
    out = []
    for c in a.integers():
        if c % 2:
            raise ValueError("odd coefficient in exact halving")
        out.append(c // 2)
    return from_integers(out, a.order)


# ---------------------------------------------------------------------------
# enumeration oracles (exact for q^0 .. q^ENUMERATION_CAP)


def enum_order(order: int) -> int:
    return min(order, ENUMERATION_CAP + 1)


def enum(v: StatVariant, order: int, z: int | None = None, const: int = 0) -> TruncatedSeries:
    n = enum_order(order)
    rows = list(stat_table(v, n - 1))
    if const:
        rows[0] = rows[0] + const
    s = TruncatedSeries(rows, n)
    return subst_z(s, z) if z is not None else s


def enum_dz(v: StatVariant, order: int, times: int = 1) -> TruncatedSeries:
    s = enum(v, order)
    for _ in range(times):
        s = dz(s)
    return s


def ffw_enum(k: int, order: int) -> TruncatedSeries:
    """``sum (-1)^# s_k`` over D(n)."""
    return subst_z(enum_dz(StatVariant.ffw_kz(k), order), 1)


@lru_cache(maxsize=64)
def _custom_table(key: str, n_max: int) -> tuple[ZPolynomial, ...]:
    return tuple(weighted_table(n_max, _CUSTOM_WEIGHTS[key]))


def _w_signed_length(p):
    # (-z)^#(pi): Euler's product (z;q)_inf without its (1 - z) factor
    return ((len(p), -1 if len(p) & 1 else 1),)


def _w_fixed_len(length):
    def w(p):
        return ((0, p[-1]),) if len(p) == length else ()

    return w


def _w_gap_odd(k):
    def w(p):
        if len(p) < k or (p[k - 1] - p[k - 2]) % 2 == 0:
            return ()
        return ((0, -1 if len(p) & 1 else 1),)

    return w


def _w_binom_smallest(k):
    # (-1)^(#-1) C(s, k)
    def w(p):
        c = comb(p[0], k)
        return ((0, c if len(p) & 1 else -c),) if c else ()

    return w


_CUSTOM_WEIGHTS = {
    "signed_length": _w_signed_length,
    **{f"fixed_len_{j}": _w_fixed_len(j) for j in range(1, 8)},
    **{f"gap_odd_{k}": _w_gap_odd(k) for k in range(2, 8)},
    **{f"binom_smallest_{k}": _w_binom_smallest(k) for k in range(1, 8)},
}


def enum_custom(key: str, order: int, const: int = 0) -> TruncatedSeries:
    n = enum_order(order)
    rows = list(_custom_table(key, n - 1))
    if const:
        rows[0] = rows[0] + const
    return TruncatedSeries(rows, n)


def from_table(values, order: int) -> TruncatedSeries:
    return from_integers(list(values)[:order], order)


# ---------------------------------------------------------------------------
# classical


def pent(order: int) -> TruncatedSeries:
    return theta(ThetaKind.PENTAGONAL, order)


def sqtheta(order: int) -> TruncatedSeries:
    return theta(ThetaKind.SQUARE, order)


def euler_product(order: int) -> TruncatedSeries:
    return qpoch(INFINITE, order)


def euler_enum(order: int) -> TruncatedSeries:
    return enum(StatVariant.ffw_kz(1), order, z=1, const=1)


def gauss_quotient(order: int) -> TruncatedSeries:
    return mul(qpoch(INFINITE, order), inv_pochhammer(PochSpec(coeff=-1), order))


def gauss_enum(order: int) -> TruncatedSeries:
    """``1 + 2 sum over D(n), s odd, of (-1)^#``."""
    odd = enum(StatVariant.parity_of_smallest("odd", Convention.SHARP), order)
    return total([one(odd.order), scale(odd, 2)], odd.order)


def jtp_sum(order: int, alpha: int, beta: int, signed: int = 1) -> TruncatedSeries:
    """Bilateral ``sum s^n a^(n(n+1)/2) b^(n(n-1)/2)`` with ``a = q^alpha``, ``b = q^beta``.

    ``s = -1`` when ``signed`` else ``1``.
    """
    out = [0] * order
    for sgn_dir in (1, -1):
        n = 0 if sgn_dir == 1 else -1
        while True:
            e = alpha * (n * (n + 1) // 2) + beta * (n * (n - 1) // 2)
            if e >= order:
                break
            out[e] += _sgn(n) if signed else 1
            n += sgn_dir
    return from_integers(out, order)


def jtp_product(order: int, alpha: int, beta: int) -> TruncatedSeries:
    """``(a; ab)(b; ab)(ab; ab)`` with ``a = q^alpha``, ``b = q^beta``."""
    step = alpha + beta
    p = mul(pochhammer(PochSpec(qpow=alpha, step=step), order),
            pochhammer(PochSpec(qpow=beta, step=step), order))
    return mul(p, pochhammer(PochSpec(qpow=step, step=step), order))


def euler_zq_product(order: int) -> TruncatedSeries:
    # (z; q)_inf = (1 - z) (zq; q)_inf
    return mul_binomial(pochhammer(PochSpec(zexp=1, qpow=1), order), 1, 1, 0)


def euler_zq_sum(order: int) -> TruncatedSeries:
    def term(m):
        t = shift_q(inv_qpoch(m, order), m * (m - 1) // 2)
        return mul_z(scale(t, _sgn(m)), m)

    # the m = 0 and m = 1 terms both start at q^0
    return qsum(term, 0, lambda m: max(m * (m - 1) // 2, 0), order)


def euler_zq_enum(order: int) -> TruncatedSeries:
    s = enum_custom("signed_length", order, const=1)
    return mul_binomial(s, 1, 1, 0)


def binom_series(order: int, N: int, m: int) -> TruncatedSeries:
    """``sum_j [N+j-1, j] z^j`` at ``z = q^(m+1)``."""
    step = m + 1
    return indexed_sum(
        enumerate(qbin_diag(N, order)),
        lambda j, b: shift_q(b, step * j),
        lambda j: step * j,
        order,
    )


def binom_product(order: int, N: int, m: int) -> TruncatedSeries:
    return inv_pochhammer(PochSpec(qpow=m + 1, count=N), order)


def binom_counts(order: int, N: int, m: int) -> TruncatedSeries:
    return from_table(restricted_partition_counts(range(m + 1, m + N + 1), order - 1), order)


def binom_diff_series(order: int, N: int, m: int) -> TruncatedSeries:
    """``sum_j j [N+j-1, j] z^(j-1)`` at ``z = q^(m+1)``."""
    step = m + 1
    return indexed_sum(
        ((j, b) for j, b in enumerate(qbin_diag(N, order)) if j >= 1),
        lambda j, b: shift_q(scale(b, j), step * (j - 1)),
        lambda j: step * (j - 1),
        order,
    )


def binom_diff_closed(order: int, N: int, m: int) -> TruncatedSeries:
    s = total([shift_q(geometric(0, m + 1 + j, order), j) for j in range(N)], order)
    return mul(binom_product(order, N, m), s)


def binom_diff_counts(order: int, N: int, m: int) -> TruncatedSeries:
    # q^(m+1) times the series counts partitions into parts m+1..m+N by length
    lengths = restricted_partition_counts(range(m + 1, m + N + 1), order + m, by_length=True)
    return shift_q(from_integers(lengths, order + m + 1), -(m + 1))


def zn_series(order: int, k: int, start: int = 0) -> TruncatedSeries:
    """``sum_{n >= start} z^n / (q;q)_n`` at ``z = q^k``."""
    def items():
        cur = one(order)
        n = 0
        while True:
            yield n, cur
            n += 1
            cur = div_binomial(cur, 1, 0, n)

    return indexed_sum(
        ((n, c) for n, c in items() if n >= start),
        lambda n, c: shift_q(c, k * n),
        lambda n: k * n,
        order,
    )


def inv_tail(order: int, k: int) -> TruncatedSeries:
    return inv_pochhammer(PochSpec(qpow=k), order)


def parts_at_least(order: int, k: int) -> TruncatedSeries:
    return from_table(restricted_partition_counts(range(k, order), order - 1), order)


def zsum_series(order: int, k: int) -> TruncatedSeries:
    """``sum_{n>=1} n z^(n-1) / (q;q)_n`` at ``z = q^k``."""
    def items():
        cur = one(order)
        n = 0
        while True:
            n += 1
            cur = div_binomial(cur, 1, 0, n)
            yield n, cur

    return indexed_sum(
        items(),
        lambda n, c: shift_q(scale(c, n), k * (n - 1)),
        lambda n: k * (n - 1),
        order,
    )


def zsum_closed(order: int, k: int) -> TruncatedSeries:
    s = qsum(lambda n: shift_q(geometric(0, k + n, order), n), 0, lambda n: n, order)
    return mul(inv_tail(order, k), s)


def zsum_counts(order: int, k: int) -> TruncatedSeries:
    lengths = restricted_partition_counts(range(k, order + k), order + k - 1, by_length=True)
    return shift_q(from_integers(lengths, order + k), -k)


# ---------------------------------------------------------------------------
# lemmas


def lemma21_brute(order: int, n: int, k: int) -> TruncatedSeries:
    out = [0] * order
    for c in combinations(range(1, n + 1), k):
        s = sum(c)
        if s < order:
            out[s] += 1
    return from_integers(out, order)


def lemma21_closed(order: int, n: int, k: int) -> TruncatedSeries:
    return shift_q(q_binomial(n, k, order), tri(k))


def lemma22_lhs(order: int, k: int) -> TruncatedSeries:
    """``sum_{n>=1} n q^(kn) / (q;q)_n``."""
    return shift_q(zsum_series(order, k), k)


def lemma22_sieve(order: int, k: int) -> TruncatedSeries:
    return mul(inv_tail(order, k), from_table(divisor_table(order - 1, k), order))


def lemma22_lambert(order: int, k: int) -> TruncatedSeries:
    s = qsum(lambda n: lambert(n, order), k, lambda n: n, order)
    return mul(inv_tail(order, k), s)


def lemma23_lhs(order: int, k: int) -> TruncatedSeries:
    """``sum_{n>=k} [n-1, k-1] n q^n / (q;q)_n`` with the ratio built incrementally."""
    def items():
        # c_n = [n-1, k-1] / (q;q)_n
        n = k
        cur = mul(q_binomial(n - 1, k - 1, order), inv_qpoch(n, order))
        while True:
            yield n, cur
            n += 1
            cur = mul_binomial(cur, 1, 0, n - 1)
            cur = div_binomial(cur, 1, 0, n - k)
            cur = div_binomial(cur, 1, 0, n)

    return indexed_sum(items(), lambda n, c: shift_q(scale(c, n), n), lambda n: n, order)


def lemma23_rhs(order: int, k: int) -> TruncatedSeries:
    exps = {i: k + i * (i - 1) // 2 - k * i for i in range(1, k + 1)}
    lift = max(0, -min(exps.values()))
    big = order + lift
    acc = []
    for i, e in exps.items():
        t = mul(inv_qpoch(k - i, big), divisor_series(i, big))
        acc.append(scale(shift_q(t, e + lift), -_sgn(i)))
    s = mul(inv_qpoch(INFINITE, big), total(acc, big))
    return shift_q(s, -lift)


# ---------------------------------------------------------------------------
# core


def ffw_tails(order: int) -> TruncatedSeries:
    """``sum n q^n (q^(n+1); q)_inf``."""
    return qsum(lambda n: shift_q(scale(tail(n + 1, order), n), n), 1, lambda n: n, order)


def uchimura_middle(order: int) -> TruncatedSeries:
    def term(n):
        t = div_binomial(inv_qpoch(n, order), 1, 0, n)
        return scale(shift_q(t, tri(n)), _sgn(n - 1))

    return qsum(term, 1, tri, order)


def ffw_enum_pos(order: int) -> TruncatedSeries:
    """``FFW(n) = sum (-1)^(#-1) s`` by enumeration."""
    return neg(ffw_enum(1, order))


def divisor_sieve(order: int) -> TruncatedSeries:
    return from_table(divisor_table(order - 1), order)


def ramanujan_lhs(order: int) -> TruncatedSeries:
    def term(n):
        t = inv_pochhammer(PochSpec(coeff=1, zexp=1, qpow=1, count=n), order)
        t = div_binomial(t, 1, 0, n)
        return mul_z(scale(shift_q(t, tri(n)), _sgn(n - 1)), n)

    return qsum(term, 1, tri, order)


def ramanujan_rhs(order: int) -> TruncatedSeries:
    return qsum(lambda n: mul_z(lambert(n, order), n), 1, lambda n: n, order)


def ramanujan_sieve(order: int) -> TruncatedSeries:
    rows = divisor_power_table(order - 1)
    return TruncatedSeries(rows, order)


def agl_tails(order: int, start: int = 0) -> TruncatedSeries:
    """``sum_{n >= start} z^n (1 - (q^(n+1); q)_inf)``; the n = 0 term is needed."""
    def term(n):
        return mul_z(sub(one(order), tail(n + 1, order)), n)

    return qsum(term, start, lambda n: n + 1, order)


def agl_middle(order: int) -> TruncatedSeries:
    def term(n):
        t = div_binomial(inv_qpoch(n, order), 1, 1, n)
        return scale(shift_q(t, tri(n)), _sgn(n - 1))

    return qsum(term, 1, tri, order)


def agl_closed(order: int) -> TruncatedSeries:
    ratio = mul(qpoch(INFINITE, order), inv_pochhammer(PochSpec(zexp=1), order))
    return exact_div_one_minus_z(sub(one(order), ratio))


def agl_enum(order: int) -> TruncatedSeries:
    return enum(StatVariant.agl_z(), order)


def signed_c_middle(order: int) -> TruncatedSeries:
    def term(n):
        t = div_binomial(inv_qpoch(n, order), 1, 0, n)
        return mul_z(scale(shift_q(t, tri(n)), _sgn(n)), n)

    return qsum(term, 1, tri, order)


def signed_c_lambert(order: int, printed: bool = False) -> TruncatedSeries:
    """``sum (c;q)_n q^n/(1-q^n) - sum q^n/(1-q^n)``; ``printed`` uses ``(-c;q)_n``."""
    def term(n):
        p = pochhammer(PochSpec(coeff=-1 if printed else 1, zexp=1, qpow=0, count=n), order)
        return mul(p, lambert(n, order))

    return sub(qsum(term, 1, lambda n: n, order), dsum(order))


def signed_c_enum(order: int) -> TruncatedSeries:
    return enum(StatVariant.ffw_c(), order)


def dilcher_lhs(order: int, k: int) -> TruncatedSeries:
    return qsum(lambda n: shift_q(scale(tail(n + 1, order), comb(n, k)), n), k, lambda n: n, order)


def dilcher_middle(order: int, k: int, printed: bool = False) -> TruncatedSeries:
    """Shifted-triangular side; the prefactor is ``q^(-k(k-1)/2)`` unless ``printed``."""
    pre = k * (k - 1) // 2

    def term(m):
        t = inv_qpoch(m, order)
        for _ in range(k):
            t = div_binomial(t, 1, 0, m)
        e = (m + k) * (m + k - 1) // 2 + (pre if printed else -pre)
        return scale(shift_q(t, e), _sgn(m - 1))

    bound = (lambda m: tri(m) + (k - 1) * m + 2 * pre) if printed else (lambda m: tri(m) + (k - 1) * m)
    return qsum(term, 1, bound, order)


def dilcher_nested(order: int, k: int) -> TruncatedSeries:
    """``sum_{j1 >= j2 >= ... >= jk >= 1} L(j1) ... L(jk)`` with ``L(j) = q^j/(1-q^j)``."""
    lam = [None] + [lambert(j, order) for j in range(1, order)]
    # level[j] = sum over j >= j_t >= ... >= j_k of the inner products (cumulative)
    prev = [one(order)] * order
    for _ in range(k):
        cur = [zero(order)] * order
        run = zero(order)
        for j in range(1, order):
            run = total([run, mul(lam[j], prev[j])], order)
            cur[j] = run
        prev = cur
    return prev[order - 1]


def dilcher_enum(order: int, k: int) -> TruncatedSeries:
    return enum_custom(f"binom_smallest_{k}", order)


def thm11_line1(order: int, k: int) -> TruncatedSeries:
    pre = k * (k - 1) // 2

    def term(n, b):
        return shift_q(scale(mul(b, tail(n + 1, order)), n), n)

    s = indexed_sum(qbin_in_n(k - 1, k - 1, order), lambda m, b: term(m + 1, b),
                    lambda m: m + 1, order)
    return scale(shift_q(s, pre), _sgn(k))


def thm11_line2(order: int, k: int, final: bool = False) -> TruncatedSeries:
    """Divisor form; ``final`` uses the index range ``1..k`` of the proof's last display."""
    idx = range(1, k + 1) if final else range(0, k)
    acc = []
    for i in idx:
        inner = sub(dsum(order), total([lambert(n, order) for n in range(1, k - i)], order))
        t = shift_q(mul(inv_qpoch(i, order), inner), tri(i))
        acc.append(scale(t, -_sgn(i)))
    return total(acc, order)


def thm11_dge(order: int, k: int) -> TruncatedSeries:
    """The same series through ``d_{>= k-i}``."""
    acc = []
    for i in range(k):
        t = shift_q(mul(inv_qpoch(i, order), divisor_series(k - i, order)), tri(i))
        acc.append(scale(t, -_sgn(i)))
    return total(acc, order)


def ffw2_closed(order: int) -> TruncatedSeries:
    d = divisor_table(order)
    return from_integers([0] + [closed_form(n, ClosedForm.FFW2, d) for n in range(1, order)], order)


def ffw3_closed(order: int) -> TruncatedSeries:
    d = divisor_table(order)
    return from_integers([0] + [closed_form(n, ClosedForm.FFW3, d) for n in range(1, order)], order)


def thm13(order: int, k: int) -> TruncatedSeries:
    def term(m):
        base = shift_q(inv_qpoch(m, order), tri(m))
        parts = [div_binomial(base, 1, 0, m - j) for j in range(k)]
        return scale(total(parts, order), _sgn(m))

    return qsum(term, k, tri, order)


# ---------------------------------------------------------------------------
# general: FFW_k(z, n)


def gen1(order: int, k: int) -> TruncatedSeries:
    """``z^k sum_{n>=k} (-1)^n q^(n(n+1)/2) / ((q;q)_(n-k) (z q^(n-k+1); q)_k)``."""
    def term(n):
        t = mul(inv_qpoch(n - k, order),
                inv_pochhammer(PochSpec(zexp=1, qpow=n - k + 1, count=k), order))
        return mul_z(scale(shift_q(t, tri(n)), _sgn(n)), k)

    return qsum(term, k, tri, order)


def gen1_qbin(order: int, k: int) -> TruncatedSeries:
    """``(-1)^k q^(k(k-1)/2) sum_{n>=k} [n-1, k-1] (zq)^n (q^(n+1); q)_inf``."""
    def term(m, b):
        n = m + 1
        return mul_z(shift_q(mul(b, tail(n + 1, order)), n), n)

    s = indexed_sum(qbin_in_n(k - 1, k - 1, order), term, lambda m: m + 1, order)
    return scale(shift_q(s, k * (k - 1) // 2), _sgn(k))


def gen2(order: int, k: int) -> TruncatedSeries:
    acc = []
    for i in range(k):
        head = total(
            [mul_z(shift_q(inv_qpoch(j, order), (i + 1) * j), j) for j in range(k)], order
        )
        bracket = sub(inv_pochhammer(PochSpec(zexp=1, qpow=i + 1), order), head)
        t = mul(mul(inv_qpoch(i, order), inv_qpoch(k - i - 1, order)), bracket)
        acc.append(scale(shift_q(t, (k - i) * (k - i - 1) // 2), _sgn(i)))
    return scale(mul(qpoch(INFINITE, order), total(acc, order)), _sgn(k))


def ffw_kz_enum(order: int, k: int, restricted: bool = True) -> TruncatedSeries:
    return enum(StatVariant.ffw_kz(k, restricted=restricted), order)


def ffw_kz_full_series(order: int, k: int) -> TruncatedSeries:
    """Full FFW_k(z, n): the at-least-k-parts series plus the shorter partitions."""
    short = [scale(shift_q(inv_qpoch(j, order), tri(j)), _sgn(j)) for j in range(1, k)]
    return total([gen1(order, k)] + short, order)


def coro1_middle(order: int) -> TruncatedSeries:
    def term(n):
        t = div_binomial(inv_qpoch(n - 1, order), -1, 0, n)
        return scale(shift_q(t, tri(n)), _sgn(n - 1))

    return qsum(term, 1, tri, order)


def coro1_closed(order: int) -> TruncatedSeries:
    p = qpoch(INFINITE, order)
    return sub(p, gauss_quotient(order))


def alladi_closed(order: int) -> TruncatedSeries:
    return from_integers([0] + [closed_form(n, ClosedForm.ALLADI) for n in range(1, order)], order)


def alladi_theta(order: int) -> TruncatedSeries:
    return halve(sub(one(order), sqtheta(order)))


def parity_dp(order: int, parity: str, convention: Convention) -> TruncatedSeries:
    return from_table(parity_table(order - 1, parity, convention), order)


def parity_enum(order: int, parity: str, convention: Convention) -> TruncatedSeries:
    return enum(StatVariant.parity_of_smallest(parity, convention), order)


def thm14_closed(order: int) -> TruncatedSeries:
    return from_integers([0] + [closed_form(n, ClosedForm.THM14) for n in range(1, order)], order)


def thm34_printed_closed(order: int) -> TruncatedSeries:
    return from_integers(
        [0] + [closed_form(n, ClosedForm.THM34_PRINTED) for n in range(1, order)], order
    )


def thm14_series(order: int) -> TruncatedSeries:
    return sub(pent(order), halve(total([sqtheta(order), one(order)], order)))


def d2_sum(order: int) -> TruncatedSeries:
    return qsum(lambda n: scale(shift_q(inv_qpoch(n, order), tri(n)), _sgn(n)), 2, tri, order)


def z1_closed(order: int) -> TruncatedSeries:
    num = from_integers([-1, 2], order)
    den = from_integers([-1, 1], order)
    return sub(pent(order), mul(num, invert(den)))


def z1_display(order: int) -> TruncatedSeries:
    return from_integers([0] + [closed_form(n, ClosedForm.Z1) for n in range(1, order)], order)


def coro2222_middle(order: int) -> TruncatedSeries:
    def term(n):
        t = div_binomial(div_binomial(inv_qpoch(n - 2, order), -1, 0, n - 1), -1, 0, n)
        return scale(shift_q(t, tri(n)), _sgn(n))

    return qsum(term, 2, tri, order)


def coro2222_closed(order: int) -> TruncatedSeries:
    p = mul(pochhammer(PochSpec(qpow=1, step=2), order), pochhammer(PochSpec(qpow=2), order))
    return sub(qpoch(INFINITE, order), p)


def thm37_closed(order: int) -> TruncatedSeries:
    return from_integers([0] + [closed_form(n, ClosedForm.THM37) for n in range(1, order)], order)


def thm37_theta(order: int) -> TruncatedSeries:
    return sub(pent(order), mul(sqtheta(order), geometric(0, 1, order)))


def genth_formula1(order: int, k: int, printed: bool = False) -> TruncatedSeries:
    """Both nested sums; ``printed`` gives the displayed ``z^(k-1)`` and ``(-1)^(n-1)``."""
    def term(n):
        base = mul(inv_qpoch(n - k, order),
                   inv_pochhammer(PochSpec(zexp=1, qpow=n - k + 1, count=k), order))
        base = shift_q(base, tri(n))
        parts = [div_binomial(base, 1, 1, n - j) for j in range(k)]
        return scale(total(parts, order), _sgn(n - 1) if printed else _sgn(n))

    s = qsum(term, k, tri, order)
    return mul_z(s, k - 1 if printed else k)


def genth_formula2(order: int, k: int, printed: bool = False) -> TruncatedSeries:
    """Second display; corrected multiplies the displayed bracket by ``z``.

    The printed bracket has a ``1/z`` term, so the printed form is returned
    multiplied by ``z`` to stay a power series in ``z``.
    """
    acc = []
    for j in range(k):
        inner = qsum(lambda m: shift_q(geometric(1, j + m, order), m + j), 1,
                     lambda m: m + j, order)
        first = mul_z(mul(inv_pochhammer(PochSpec(zexp=1, qpow=j + 1), order), inner), 1)
        second = total(
            [mul_z(shift_q(scale(inv_qpoch(n, order), n), (j + 1) * n), n) for n in range(k)],
            order,
        )
        bracket = sub(first, second)
        t = mul(mul(inv_qpoch(j, order), inv_qpoch(k - j - 1, order)), bracket)
        acc.append(scale(shift_q(t, (k - j) * (k - j - 1) // 2), _sgn(j)))
    s = scale(mul(qpoch(INFINITE, order), total(acc, order)), _sgn(k))
    # corrected = z * printed, and the printed form times z is the bracket above
    return s


def genth_enum(order: int, k: int) -> TruncatedSeries:
    return enum_dz(StatVariant.ffw_kz(k), order)


def coro39_tails(order: int) -> TruncatedSeries:
    return qsum(lambda n: mul_z(shift_q(scale(tail(n + 1, order), n), n), n), 1,
                lambda n: n, order)


def coro39_square(order: int, zval: int | None = None) -> TruncatedSeries:
    """``sum (-1)^(n-1) q^(n(n+1)/2) / ((q;q)_(n-1) (1 - z q^n)^2)``."""
    def term(n):
        t = inv_qpoch(n - 1, order)
        if zval is None:
            t = div_binomial(div_binomial(t, 1, 1, n), 1, 1, n)
        else:
            t = div_binomial(div_binomial(t, zval, 0, n), zval, 0, n)
        return scale(shift_q(t, tri(n)), _sgn(n - 1))

    return qsum(term, 1, tri, order)


def coro39_product(order: int) -> TruncatedSeries:
    ratio = mul(qpoch(INFINITE, order), inv_pochhammer(PochSpec(zexp=1), order))
    s = qsum(lambda m: shift_q(geometric(1, m, order), m), 1, lambda m: m, order)
    return mul(ratio, s)


def power_enum(order: int, m: int, zval: int | None = None) -> TruncatedSeries:
    return enum(StatVariant.power(m), order, z=zval)


def coro310_product(order: int) -> TruncatedSeries:
    s = qsum(lambda n: shift_q(_alt_geometric(n, order), n), 1, lambda n: n, order)
    return mul(gauss_quotient(order), s)


def _alt_geometric(n: int, order: int) -> TruncatedSeries:
    """``1 / (1 + q^n)``."""
    return div_binomial(one(order), -1, 0, n)


def m_mc_definition(order: int, m: int) -> TruncatedSeries:
    return qsum(lambda n: mul_z(shift_q(scale(tail(n + 1, order), n ** m), n), n), 1,
                lambda n: n, order)


def m_mc_dz(order: int, m: int) -> TruncatedSeries:
    s = gen1(order, 1)
    for _ in range(m):
        s = dz(s)
    return neg(s)


# ---------------------------------------------------------------------------
# sum-of-tails


def ztails_formula(order: int, k: int, zval: int | None = None, alt_m: bool = False) -> TruncatedSeries:
    """Tails form with ``z^(n-m-1)``; ``zval`` substitutes z; ``alt_m`` inserts ``(-1)^m``."""
    def inner(m):
        def t(n):
            x = tail_minus_one(n, order)
            e = n - m - 1
            return scale(x, zval ** e) if zval is not None else mul_z(x, e)

        return qsum(t, m + 1, lambda n: n, order)

    def outer(mm, b):
        m = mm + 1
        t = shift_q(mul(b, inner(m)), m)
        return scale(t, _sgn(m)) if alt_m else t

    s = indexed_sum(qbin_in_n(k - 2, k - 2, order), outer, lambda mm: 2 * mm + 3, order)
    return scale(shift_q(s, (k - 1) * (k - 2) // 2), _sgn(k - 1))


def ztails_swapped(order: int, k: int) -> TruncatedSeries:
    """Outer sum over n: ``sum_n ((q^n;q)_inf - 1) sum_{m=k-1}^{n-1} q^m [m-1,k-2] z^(n-m-1)``."""
    def term(n):
        inner = total(
            [mul_z(shift_q(q_binomial(m - 1, k - 2, order), m), n - m - 1) for m in range(k - 1, n)],
            order,
        )
        return mul(tail_minus_one(n, order), inner)

    s = qsum(term, k, lambda n: n, order)
    return scale(shift_q(s, (k - 1) * (k - 2) // 2), _sgn(k - 1))


def tails_enum(order: int, k: int, zval: int | None = None) -> TruncatedSeries:
    return enum(StatVariant.tails(k), order, z=zval)


def minus_formula(order: int, k: int) -> TruncatedSeries:
    def term(m, b):
        return mul(b, tail_minus_one(m + 1, order))

    s = indexed_sum(qbin_in_n(k - 1, k - 1, order), term, lambda m: m + 1, order)
    return scale(shift_q(s, k * (k - 1) // 2), _sgn(k - 1))


def diff_enum(order: int, k: int) -> TruncatedSeries:
    return enum(StatVariant.diff(k), order)


def uchimura_tails(order: int) -> TruncatedSeries:
    return qsum(lambda n: tail_minus_one(n, order), 1, lambda n: n, order)


def largest_part_series(order: int, length: int) -> TruncatedSeries:
    """``q^(L(L-1)/2) sum_{n>=L} [n-1, L-1] n q^n`` for ``L = length >= 1``."""
    def term(m, b):
        n = m + 1
        return shift_q(scale(b, n), n)

    s = indexed_sum(qbin_in_n(length - 1, length - 1, order), term, lambda m: m + 1, order)
    return shift_q(s, length * (length - 1) // 2)


def largest_part_enum(order: int, length: int) -> TruncatedSeries:
    return enum_custom(f"fixed_len_{length}", order)


def recursive_rhs(order: int, k: int, base: str) -> TruncatedSeries:
    prev = ffw_enum(k - 1, order) if base == "enum" else thm11_line2(order, k - 1)
    n = prev.order
    largest = scale(largest_part_series(n, k - 1), _sgn(k - 1))
    return sub(total([prev, minus_formula(n, k)], n), largest)


def thm44_telescoped(order: int, k: int) -> TruncatedSeries:
    acc = [neg(dsum(order))]
    for l in range(2, k + 1):
        acc.append(minus_formula(order, l))
        acc.append(scale(largest_part_series(order, l - 1), -_sgn(l - 1)))
    return total(acc, order)


def thm44_reading(order: int, k: int, printed: bool = False) -> TruncatedSeries:
    """Statement-shaped forms with inner sums from ``n = k``.

    ``printed``: sign ``(-1)^(l(l-1)/2)``, l up to the truncation, and the
    divisor sum from ``n = k``.  Otherwise: sign ``(-1)^(l-1)``, l in
    ``2..k``, inner sums from ``n = l``, and the divisor sum from ``n = 1``.
    """
    acc = []
    top = order if printed else k
    for l in range(2, top + 1):
        lo = k if printed else l
        a = indexed_sum(
            qbin_in_n(l - 1, lo - 1, order),
            lambda m, b: mul(b, tail_minus_one(m + 1, order)),
            lambda m: m + 1, order,
        )
        bsum = indexed_sum(
            qbin_in_n(l - 2, lo - 1, order),
            lambda m, b: shift_q(scale(b, m + 1), m + 1),
            lambda m: m + 1, order,
        )
        piece = sub(shift_q(a, l * (l - 1) // 2), shift_q(bsum, (l - 1) * (l - 2) // 2))
        sign = _sgn(l * (l - 1) // 2) if printed else _sgn(l - 1)
        acc.append(scale(piece, sign))
    d = divisor_table(order - 1)
    lo = k if printed else 1
    acc.append(from_integers([c if n >= lo else 0 for n, c in enumerate(d)], order))
    return total(acc, order)


def zneg1_enum(order: int, k: int) -> TruncatedSeries:
    return enum_custom(f"gap_odd_{k}", order)


def zneg1_k2_printed(order: int) -> TruncatedSeries:
    def term(n):
        return scale(mul_binomial(tail_minus_one(n, order), 1, 0, n - 1), _sgn(n))

    s = qsum(term, 2, lambda n: n, order)
    return shift_q(mul(s, geometric(0, 1, order)), 1)


def zneg1_k2_corrected(order: int) -> TruncatedSeries:
    def term(n):
        inner = from_integers([0] + [_sgn(m) for m in range(1, min(n, order))], order)
        return scale(mul(tail_minus_one(n, order), inner), _sgn(n))

    return qsum(term, 2, lambda n: n, order)
