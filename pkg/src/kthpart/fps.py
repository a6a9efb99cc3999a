"""Truncated power series in q with integer polynomial coefficients in z.

A :class:`TruncatedSeries` of order ``N`` stores the exact coefficients of
``q^0 .. q^(N-1)``.  Each coefficient is a :class:`ZPolynomial` in a single
auxiliary variable, written ``z`` throughout (it also plays the role of the
parameter ``c`` in Ramanujan-type identities).

Binary operations return a series whose order is the minimum of the operand
orders.  Nothing is ever extended implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence, Union


class SeriesError(ValueError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class InvalidPochSpec(SeriesError):
    pass


class ZeroQPower(SeriesError):
    pass


class NotDivisible(SeriesError):
    pass


# ---------------------------------------------------------------------------
# raw coefficient tuples


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _psub(a: tuple, b: tuple) -> tuple:
    if not b:
        return a
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _pscale(a: tuple, c: int) -> tuple:
    if c == 0 or not a:
        return ()
    if c == 1:
        return a
    return tuple(x * c for x in a)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pshift(a: tuple, e: int) -> tuple:
    """Multiply by ``z^e`` (``e >= 0``)."""
    if not a or e == 0:
        return a
    return (0,) * e + a


# ---------------------------------------------------------------------------
# ZPolynomial


class ZPolynomial:
    """Dense polynomial in ``z`` with Python ``int`` coefficients.

    ``coeffs[i]`` is the coefficient of ``z^i``; trailing zeros are stripped so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def _wrap(cls, coeffs: tuple) -> "ZPolynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: int) -> "ZPolynomial":
        return cls._wrap((c,) if c else ())

    @classmethod
    def monomial(cls, c: int, e: int) -> "ZPolynomial":
        if e < 0:
            raise ValueError("negative z-exponent")
        return cls._wrap(_pshift((c,), e) if c else ())

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other) -> tuple:
        if isinstance(other, ZPolynomial):
            return other.coeffs
        if isinstance(other, int):
            return (other,) if other else ()
        raise TypeError(f"cannot combine ZPolynomial with {type(other).__name__}")

    def __add__(self, other):
        return ZPolynomial._wrap(_padd(self.coeffs, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return ZPolynomial._wrap(_psub(self.coeffs, self._coerce(other)))

    def __rsub__(self, other):
        return ZPolynomial._wrap(_psub(self._coerce(other), self.coeffs))

    def __neg__(self):
        return ZPolynomial._wrap(tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        return ZPolynomial._wrap(_pmul(self.coeffs, self._coerce(other)))

    __rmul__ = __mul__

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def z_derivative(self) -> "ZPolynomial":
        """Apply ``z d/dz``: ``c z^m -> m c z^m``."""
        return ZPolynomial._wrap(_trim([i * c for i, c in enumerate(self.coeffs)]))

    def div_one_minus_z(self) -> "ZPolynomial":
        """Exact quotient by ``1 - z``; raises :class:`NotDivisible` otherwise."""
        if self(1) != 0:
            raise NotDivisible(f"{self} has value {self(1)} at z=1")
        # p = (1 - z) r  =>  r_i = sum_{j<=i} p_j
        out, acc = [], 0
        for c in self.coeffs[:-1]:
            acc += c
            out.append(acc)
        return ZPolynomial._wrap(_trim(out))

    def div_z(self, e: int = 1) -> "ZPolynomial":
        if any(self.coeffs[:e]):
            raise NotDivisible(f"{self} is not divisible by z^{e}")
        return ZPolynomial._wrap(self.coeffs[e:])

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z" if i == 1 else f"{c}*z^{i}")
        return " + ".join(terms)


Coeff = Union[ZPolynomial, int]

ZERO = ZPolynomial()
ONE = ZPolynomial.constant(1)
Z = ZPolynomial.monomial(1, 1)


def _as_poly(c: Coeff) -> ZPolynomial:
    if isinstance(c, ZPolynomial):
        return c
    return ZPolynomial.constant(int(c))


# ---------------------------------------------------------------------------
# TruncatedSeries


class TruncatedSeries:
    """Coefficients of ``q^0 .. q^(order-1)``, each a :class:`ZPolynomial`."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Coeff], order: int | None = None):
        coeffs = [_as_poly(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("order must be positive")
        if len(coeffs) > order:
            coeffs = coeffs[:order]
        coeffs += [ZERO] * (order - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, raw: Sequence[tuple], order: int) -> "TruncatedSeries":
        s = object.__new__(cls)
        s.order = order
        s.coeffs = tuple(ZPolynomial._wrap(t) for t in raw)
        return s

    def _tuples(self) -> list[tuple]:
        return [c.coeffs for c in self.coeffs]

    def __getitem__(self, n: int) -> ZPolynomial:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        return add(self, _coerce_series(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce_series(other, self.order))

    def __rsub__(self, other):
        return sub(_coerce_series(other, self.order), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, ZPolynomial)):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        return truncate(self, order)

    def is_z_free(self) -> bool:
        return all(len(c.coeffs) <= 1 for c in self.coeffs)

    def integers(self) -> list[int]:
        """Coefficients as plain integers; the series must be z-free."""
        if not self.is_z_free():
            raise ValueError("series has z-dependent coefficients")
        return [c.coeffs[0] if c.coeffs else 0 for c in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body}, order={self.order})"


def _coerce_series(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return constant(x, order)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries._raw([()] * order, order)


def constant(c: Coeff, order: int) -> TruncatedSeries:
    raw = [()] * order
    raw[0] = _as_poly(c).coeffs
    return TruncatedSeries._raw(raw, order)


def one(order: int) -> TruncatedSeries:
    return constant(1, order)


def monomial(c: int, zexp: int, qexp: int, order: int) -> TruncatedSeries:
    """The series ``c z^zexp q^qexp`` (zero when ``qexp >= order``)."""
    raw = [()] * order
    if 0 <= qexp < order and c:
        raw[qexp] = _pshift((c,), zexp)
    return TruncatedSeries._raw(raw, order)


def from_integers(values: Sequence[int], order: int | None = None) -> TruncatedSeries:
    order = len(values) if order is None else order
    raw = [((v,) if v else ()) for v in values[:order]]
    raw += [()] * (order - len(raw))
    return TruncatedSeries._raw(raw, order)


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    if order > a.order:
        raise ValueError(f"cannot extend a series of order {a.order} to {order}")
    if order == a.order:
        return a
    return TruncatedSeries._raw(a._tuples()[:order], order)


def valuation(a: TruncatedSeries) -> float:
    """Smallest ``n`` with a nonzero coefficient; ``inf`` if none below the order."""
    for n, c in enumerate(a.coeffs):
        if c:
            return n
    return math.inf


# ---------------------------------------------------------------------------
# ring operations


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw(
        [_padd(x.coeffs, y.coeffs) for x, y in zip(a.coeffs[:n], b.coeffs[:n])], n
    )


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw(
        [_psub(x.coeffs, y.coeffs) for x, y in zip(a.coeffs[:n], b.coeffs[:n])], n
    )


def neg(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries._raw([tuple(-v for v in t) for t in a._tuples()], a.order)


def scale(a: TruncatedSeries, c: Coeff) -> TruncatedSeries:
    """Multiply every coefficient by an integer or a polynomial in z."""
    p = _as_poly(c).coeffs
    return TruncatedSeries._raw([_pmul(t, p) for t in a._tuples()], a.order)


def total(terms: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    """Sum of series; the result has order ``min(order, orders of terms)``."""
    acc = [[] for _ in range(order)]
    n = order
    for t in terms:
        n = min(n, t.order)
        for i, c in enumerate(t.coeffs[:n]):
            if c.coeffs:
                row = acc[i]
                cc = c.coeffs
                if len(row) < len(cc):
                    row.extend([0] * (len(cc) - len(row)))
                for d, v in enumerate(cc):
                    row[d] += v
    return TruncatedSeries._raw([_trim(r) for r in acc[:n]], n)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    A = a._tuples()[:n]
    B = b._tuples()[:n]
    if a.is_z_free() and b.is_z_free():
        av = [t[0] if t else 0 for t in A]
        bv = [t[0] if t else 0 for t in B]
        out = [0] * n
        bnz = [(j, y) for j, y in enumerate(bv) if y]
        for i, x in enumerate(av):
            if x:
                lim = n - i
                for j, y in bnz:
                    if j >= lim:
                        break
                    out[i + j] += x * y
        return from_integers(out, n)
    acc = [[] for _ in range(n)]
    bnz = [(j, t) for j, t in enumerate(B) if t]
    for i, x in enumerate(A):
        if not x:
            continue
        lim = n - i
        for j, y in bnz:
            if j >= lim:
                break
            row = acc[i + j]
            need = len(x) + len(y) - 1
            if len(row) < need:
                row.extend([0] * (need - len(row)))
            for dx, cx in enumerate(x):
                if cx:
                    for dy, cy in enumerate(y):
                        row[dx + dy] += cx * cy
    return TruncatedSeries._raw([_trim(r) for r in acc], n)


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return power(invert(a), -e)
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be ``+1`` or ``-1``."""
    a0 = a.coeffs[0]
    if a0.coeffs not in ((1,), (-1,)):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit")
    u = a0.coeffs[0]
    n = a.order
    A = a._tuples()
    out: list[tuple] = [(u,)]
    anz = [(i, t) for i, t in enumerate(A) if t and i > 0]
    for m in range(1, n):
        acc: tuple = ()
        for i, t in anz:
            if i > m:
                break
            bm = out[m - i]
            if bm:
                acc = _padd(acc, _pmul(t, bm))
        out.append(_pscale(acc, -u))
    return TruncatedSeries._raw(out, n)


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return mul(a, invert(b))


def mul_binomial(a: TruncatedSeries, c: int, zexp: int, qexp: int) -> TruncatedSeries:
    """``a * (1 - c z^zexp q^qexp)`` in O(order) coefficient operations."""
    if qexp < 0 or zexp < 0:
        raise ValueError("negative exponent")
    A = a._tuples()
    n = a.order
    if qexp >= n or c == 0:
        return a
    out = list(A)
    for m in range(n - 1, qexp - 1, -1):
        src = A[m - qexp]
        if src:
            out[m] = _psub(out[m], _pshift(_pscale(src, c), zexp))
    return TruncatedSeries._raw(out, n)


def div_binomial(a: TruncatedSeries, c: int, zexp: int, qexp: int) -> TruncatedSeries:
    """``a / (1 - c z^zexp q^qexp)`` for ``qexp >= 1``."""
    if qexp < 1:
        raise ZeroQPower("division by 1 - c z^e requires a positive power of q")
    out = list(a._tuples())
    for m in range(qexp, a.order):
        prev = out[m - qexp]
        if prev:
            out[m] = _padd(out[m], _pshift(_pscale(prev, c), zexp))
    return TruncatedSeries._raw(out, a.order)


def shift_q(a: TruncatedSeries, s: int) -> TruncatedSeries:
    """Multiply by ``q^s``.

    For ``s >= 0`` the order is kept.  For ``s < 0`` the first ``-s``
    coefficients must vanish and the order drops by ``-s``.
    """
    if s >= 0:
        raw = [()] * min(s, a.order) + a._tuples()[: max(a.order - s, 0)]
        return TruncatedSeries._raw(raw, a.order)
    k = -s
    if k >= a.order:
        raise ValueError("shift leaves an empty series")
    if any(a.coeffs[:k]):
        raise NotDivisible(f"series is not divisible by q^{k}")
    return TruncatedSeries._raw(a._tuples()[k:], a.order - k)


def mul_z(a: TruncatedSeries, e: int) -> TruncatedSeries:
    return TruncatedSeries._raw([_pshift(t, e) for t in a._tuples()], a.order)


def div_z(a: TruncatedSeries, e: int = 1) -> TruncatedSeries:
    return TruncatedSeries._raw([c.div_z(e).coeffs for c in a.coeffs], a.order)


# ---------------------------------------------------------------------------
# building blocks


INFINITE = math.inf


@dataclass(frozen=True)
class PochSpec:
    """``(a; q^step)_count`` with ``a = coeff * z^zexp * q^qpow``.

    ``coeff`` is ``+1`` or ``-1``; ``count`` is a nonnegative int or
    :data:`INFINITE`.
    """

    coeff: int = 1
    zexp: int = 0
    qpow: int = 1
    step: int = 1
    count: float = INFINITE

    def validate(self) -> None:
        if self.coeff not in (1, -1):
            raise InvalidPochSpec(f"coefficient {self.coeff} is not +1 or -1")
        if self.zexp < 0 or self.qpow < 0:
            raise InvalidPochSpec("exponents must be nonnegative")
        if self.step < 1:
            raise InvalidPochSpec("step must be a positive power of q")
        if self.count == INFINITE:
            if self.qpow < 1:
                raise InvalidPochSpec("infinite product needs a positive q-power in its base")
        elif not (isinstance(self.count, int) and self.count >= 0):
            raise InvalidPochSpec(f"bad count {self.count!r}")


def poch(
    coeff: int = 1,
    zexp: int = 0,
    qpow: int = 1,
    step: int = 1,
    count: float = INFINITE,
    *,
    order: int,
) -> TruncatedSeries:
    return pochhammer(PochSpec(coeff, zexp, qpow, step, count), order)


@lru_cache(maxsize=4096)
def pochhammer(spec: PochSpec, order: int) -> TruncatedSeries:
    spec.validate()
    result = one(order)
    i = 0
    while spec.count == INFINITE or i < spec.count:
        e = spec.qpow + i * spec.step
        if e >= order:
            break
        result = mul_binomial(result, spec.coeff, spec.zexp, e)
        i += 1
    return result


@lru_cache(maxsize=4096)
def inv_pochhammer(spec: PochSpec, order: int) -> TruncatedSeries:
    """``1 / pochhammer(spec)`` by repeated binomial division."""
    spec.validate()
    result = one(order)
    i = 0
    while spec.count == INFINITE or i < spec.count:
        e = spec.qpow + i * spec.step
        if e >= order:
            break
        if e == 0:
            raise NonUnitConstantTerm("factor with q^0 has a non-unit constant term")
        result = div_binomial(result, spec.coeff, spec.zexp, e)
        i += 1
    return result


def qpoch(n: float, order: int) -> TruncatedSeries:
    """Shorthand for ``(q;q)_n``."""
    return pochhammer(PochSpec(count=n), order)


def inv_qpoch(n: float, order: int) -> TruncatedSeries:
    """Shorthand for ``1/(q;q)_n``."""
    return inv_pochhammer(PochSpec(count=n), order)


@lru_cache(maxsize=4096)
def q_binomial(n: int, k: int, order: int) -> TruncatedSeries:
    """Gaussian binomial ``[n, k]_q``; zero when ``n < k``."""
    if k < 0 or n < 0 or n < k:
        return zero(order)
    k = min(k, n - k)
    num = pochhammer(PochSpec(qpow=n - k + 1, count=k), order)
    return mul(num, inv_pochhammer(PochSpec(count=k), order))


def geometric(zpow: int, qpow: int, order: int) -> TruncatedSeries:
    """``1 / (1 - z^zpow q^qpow)``."""
    if qpow < 1:
        raise ZeroQPower("1/(1 - z^a) is not a power series in q")
    raw = [()] * order
    for j in range(0, (order - 1) // qpow + 1):
        raw[j * qpow] = _pshift((1,), j * zpow)
    return TruncatedSeries._raw(raw, order)


def exact_div_one_minus_z(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries._raw([c.div_one_minus_z().coeffs for c in a.coeffs], a.order)


class ThetaKind(Enum):
    PENTAGONAL = "pentagonal"
    SQUARE = "square"


def theta(kind: ThetaKind, order: int) -> TruncatedSeries:
    """``sum (-1)^j q^(j(3j+1)/2)`` or ``sum (-1)^j q^(j^2)`` over all integers j."""
    out = [0] * order
    out[0] = 1
    j = 1
    while True:
        sign = -1 if j & 1 else 1
        if kind is ThetaKind.PENTAGONAL:
            exps = (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2)
        else:
            exps = (j * j, j * j)
        if exps[0] >= order:
            break
        for e in exps:
            if e < order:
                out[e] += sign
        j += 1
    return from_integers(out, order)


def dz(a: TruncatedSeries) -> TruncatedSeries:
    """Apply ``z d/dz`` to every coefficient."""
    return TruncatedSeries._raw([c.z_derivative().coeffs for c in a.coeffs], a.order)


def subst_z(a: TruncatedSeries, v: int) -> TruncatedSeries:
    return from_integers([c(v) for c in a.coeffs], a.order)


def divisor_series(k_min: int, order: int) -> TruncatedSeries:
    """``sum_n d_{>=k_min}(n) q^n``, summing ``q^m/(1-q^m)`` over ``m >= k_min``."""
    out = [0] * order
    for m in range(max(k_min, 1), order):
        for multiple in range(m, order, m):
            out[multiple] += 1
    return from_integers(out, order)


def first_mismatch(
    a: TruncatedSeries, b: TruncatedSeries, n_lo: int = 0
) -> tuple[int, ZPolynomial, ZPolynomial] | None:
    for n in range(max(n_lo, 0), min(a.order, b.order)):
        if a.coeffs[n] != b.coeffs[n]:
            return n, a.coeffs[n], b.coeffs[n]
    return None


# ---------------------------------------------------------------------------
# text format: one line per q-power, ``n: [c0, c1, ...]``


def format_poly(p: ZPolynomial) -> str:
    return "[" + ", ".join(p.to_strings()) + "]"


def serialize(a: TruncatedSeries) -> str:
    return "".join(f"{n}: {format_poly(c)}\n" for n, c in enumerate(a.coeffs))


def deserialize(text: str) -> TruncatedSeries:
    coeffs = []
    for lineno, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        head, _, body = line.partition(":")
        if int(head) != len(coeffs):
            raise ValueError(f"line {lineno + 1}: expected index {len(coeffs)}")
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"line {lineno + 1}: malformed coefficient {body!r}")
        inner = body[1:-1].strip()
        vals = [int(x) for x in inner.split(",")] if inner else []
        if vals and vals[-1] == 0:
            raise ValueError(f"line {lineno + 1}: non-canonical trailing zero")
        coeffs.append(ZPolynomial(vals))
    if not coeffs:
        raise ValueError("empty series")
    return TruncatedSeries(coeffs)
