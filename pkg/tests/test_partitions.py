import pytest
from hypothesis import given
from hypothesis import strategies as st

from kthpart import partitions as P
from kthpart.partitions import ClosedForm, Convention, StatVariant
from oracles import distinct_partitions, divisors, signed_sum

# number of partitions of n into distinct parts, n = 0..15
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]


def test_distinct_counts():
    assert [sum(1 for _ in P.enum_distinct(n)) for n in range(16)] == DISTINCT_COUNTS
    assert P.distinct_count_table(15) == DISTINCT_COUNTS


def test_enumeration_order_and_restart():
    it = P.enum_distinct(8)
    first = [p.parts for p in it]
    assert first == [(1, 2, 5), (1, 3, 4), (1, 7), (2, 6), (3, 5), (8,)]
    assert [p.parts for p in it] == first
    assert first == sorted(first)


def test_empty_partition():
    assert [p.parts for p in P.enum_distinct(0)] == [()]
    with pytest.raises(ValueError):
        P.enum_distinct(-1)


def test_distinct_partition_validation():
    with pytest.raises(ValueError):
        P.DistinctPartition((2, 2))
    with pytest.raises(ValueError):
        P.DistinctPartition((0, 1))
    p = P.DistinctPartition((1, 4, 6))
    assert (p.size, len(p), p.smallest, p.largest) == (11, 3, 1, 6)


def test_s_k():
    assert [P.s_k((2, 5, 9), k) for k in range(5)] == [0, 2, 5, 9, 0]


@given(st.integers(1, 22))
def test_enumeration_matches_oracle(n):
    assert [p.parts for p in P.enum_distinct(n)] == sorted(distinct_partitions(n))


def _weight_oracle(variant):
    tag, k, m = variant.tag, variant.k, variant.m

    def w(p):
        sign = -1 if len(p) % 2 else 1
        if tag == "FFW_KZ":
            return {p[k - 1] if len(p) >= k else 0: sign}
        if tag == "AGL_Z":
            return {i: -sign for i in range(p[0])}
        if tag == "FFW_C":
            return {len(p): sign * p[0]}
        if tag == "POWER":
            return {p[0]: sign * p[0] ** m}
        prev = p[k - 2] if k >= 2 and len(p) >= k else 0
        if len(p) < k:
            return {}
        if tag == "TAILS":
            return {i: sign for i in range(p[k - 1] - prev)}
        return {0: sign * (p[k - 1] - prev)}

    return w


VARIANTS = [StatVariant.ffw_kz(1), StatVariant.ffw_kz(3), StatVariant.agl_z(), StatVariant.ffw_c(),
            StatVariant.power(0), StatVariant.power(2), StatVariant.tails(1), StatVariant.tails(3),
            StatVariant.diff(2)]


@pytest.mark.parametrize("variant", VARIANTS, ids=lambda v: f"{v.tag}-{v.k}-{v.m}")
def test_stat_poly_matches_oracle(variant):
    w = _weight_oracle(variant)
    table = P.stat_table(variant, 18)
    for n in range(1, 19):
        assert P.stat_poly(n, variant).coeffs == signed_sum(n, w)
        assert table[n].coeffs == signed_sum(n, w)


def test_restricted_ffw_drops_short_partitions():
    full = P.stat_poly(10, StatVariant.ffw_kz(3))
    restricted = P.stat_poly(10, StatVariant.ffw_kz(3, restricted=True))
    short = sum((-1) ** len(p) for p in distinct_partitions(10) if len(p) < 3)
    assert full - restricted == short


@pytest.mark.parametrize("bad", [
    lambda: StatVariant.ffw_kz(0), lambda: StatVariant.power(-1), lambda: StatVariant.tails(0),
    lambda: StatVariant.diff(0), lambda: StatVariant.parity_of_smallest("prime", Convention.SHARP),
])
def test_variant_validation(bad):
    with pytest.raises(ValueError):
        bad()


def test_stat_poly_requires_positive_n():
    with pytest.raises(ValueError):
        P.stat_poly(0, StatVariant.agl_z())


@given(st.integers(1, 30), st.integers(1, 4))
def test_tails_at_one_is_diff(n, k):
    assert P.stat_poly(n, StatVariant.tails(k))(1) == P.stat_poly(n, StatVariant.diff(k))(1)


def test_smallest_part_sum_is_minus_divisor_count():
    assert [P.ffw_k(n, 1) for n in range(1, 61)] == [-divisors(n) for n in range(1, 61)]
    assert P.ffw_k(0, 2) == 0


def test_ffw_k_table_matches_pointwise():
    assert P.ffw_k_table(2, 20)[1:] == [P.ffw_k(n, 2) for n in range(1, 21)]


# --- sieves ---------------------------------------------------------------


@given(st.integers(1, 300), st.integers(1, 12))
def test_divisor_count(n, k):
    brute = sum(1 for d in range(k, n + 1) if n % d == 0)
    assert P.divisor_count(n, k) == brute
    assert P.divisor_table(n, k)[n] == brute


def test_divisor_power_table():
    assert P.divisor_power_table(6)[6].coeffs == (0, 1, 1, 1, 0, 0, 1)


def test_restricted_partition_counts():
    # partitions of n into parts 1 and 2: floor(n/2) + 1
    assert P.restricted_partition_counts([1, 2], 9) == [n // 2 + 1 for n in range(10)]
    # by length: total number of parts over partitions of 4 into {1,2}: 4 + 3 + 2 = 9
    assert P.restricted_partition_counts([1, 2], 4, by_length=True)[4] == 9
    assert P.parts_lt_count(5, 3) == 3
    with pytest.raises(ValueError):
        P.restricted_partition_counts([0], 3)


def test_largest_sum_fixed_len():
    # 9 = 1+8 = 2+7 = 3+6 = 4+5
    assert P.largest_sum_fixed_len(9, 2) == 26


@pytest.mark.parametrize("parity", ["odd", "even"])
@pytest.mark.parametrize("conv", list(Convention))
def test_parity_dp_matches_enumeration(parity, conv):
    v = StatVariant.parity_of_smallest(parity, conv)
    table = P.stat_table(v, 40)
    assert P.parity_table(40, parity, conv)[1:] == [table[n](1) for n in range(1, 41)]


# --- closed forms ---------------------------------------------------------


def test_pentagonal_and_square_helpers():
    pents = {j * (3 * j - 1) // 2: j for j in range(-8, 9) if j}
    for n in range(1, 100):
        assert P.pentagonal_index(n) == pents.get(n)
    assert P.pentagonal_index(0) is None
    assert [P.square_root(n) for n in (0, 1, 2, 49, 50)] == [0, 1, None, 7, None]


def test_ffw2_and_ffw3_closed_forms():
    for k, which in ((2, ClosedForm.FFW2), (3, ClosedForm.FFW3)):
        table = P.ffw_k_table(k, 50)
        d = P.divisor_table(50)
        assert [P.closed_form(n, which, d) for n in range(1, 51)] == table[1:]
        assert P.closed_form(17, which) == table[17]


def test_parity_closed_forms():
    even_sharp = P.parity_table(120, "even", Convention.SHARP)
    assert [P.closed_form(n, ClosedForm.THM14) for n in range(1, 121)] == even_sharp[1:]
    odd_minus = P.parity_table(120, "odd", Convention.SHARP_MINUS_ONE)
    assert [P.closed_form(n, ClosedForm.ALLADI) for n in range(1, 121)] == odd_minus[1:]


def test_printed_case_labels_disagree_with_enumeration():
    truth = [P.closed_form(n, ClosedForm.THM14) for n in range(1, 30)]
    printed = [P.closed_form(n, ClosedForm.THM34_PRINTED) for n in range(1, 30)]
    assert truth != printed
    assert next(n for n, (a, b) in enumerate(zip(truth, printed), 1) if a != b) == 2


@pytest.mark.parametrize("k", [3, 4, 5])
def test_parts_below_k_grow_like_n_to_k_minus_2(k):
    from math import factorial

    n = 2000
    main = n ** (k - 2) / (factorial(k - 1) * factorial(k - 2))
    assert abs(P.parts_lt_count(n, k) / main - 1) < 0.01
    # the exponent k reading is off by orders of magnitude
    assert P.parts_lt_count(n, k) < 1e-3 * n ** k / (factorial(k) * factorial(k - 1))
