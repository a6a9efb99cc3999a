import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kthpart import fps
from kthpart.partitions import StatVariant, ffw_k_table, stat_table
from kthpart.verify import (
    SUITES, Expectation, IdentityCheck, Side, Status, UnknownIdentity,
    asym_table, lookup, registry, reports_json, run, run_suite, suite_passes,
)
from kthpart.verify import builders as b
from kthpart.verify.asym import ffw2_values, ffw_values, main_term, sample_points
from kthpart.verify.core import compare_sides

# First disagreement of every printed form at order 40: (id, n, lhs, rhs).
# Recorded from the first verified run and frozen here.
PRINTED_MISMATCHES = [
    ("jtp_printed", 1, (2,), (-2,)),
    ("zn_21_printed", 0, (), (1,)),
    ("agl_printed", 1, (1,), ()),
    ("gup_c_printed", 1, (0, -1), (0, 1)),
    ("dilcher_printed", 2, (1,), ()),
    ("thm11_proof_final", 1, (-1,), ()),
    ("gen1_printed", 1, (-1,), ()),
    ("alladi_printed", 1, (-1,), (1,)),
    ("thm34_printed", 2, (), (-1,)),
    ("genth_printed", 1, (0, 0, -1), (0, 1)),
    ("coro39_printed", 1, (0, -1), (0, 1)),
    ("thm44_corrected", 1, (), (1,)),
    ("thm44_printed", 2, (), (4,)),
    ("zneg1_k2_printed", 3, (1,), (-1,)),
    ("zneg1_gen_printed", 3, (1,), (-1,)),
]

# corrected counterpart of each printed form
COUNTERPARTS = {
    "jtp_printed": "jtp_qq", "zn_21_printed": "zn_21", "agl_printed": "agl",
    "gup_c_printed": "gup_c", "dilcher_printed": "dilcher", "thm11_proof_final": "thm11",
    "gen1_printed": "gen1", "alladi_printed": "alladi", "thm34_printed": "thm14",
    "genth_printed": "genth", "coro39_printed": "coro39", "thm44_corrected": "thm44_telescoped",
    "thm44_printed": "thm44_telescoped", "zneg1_k2_printed": "zneg1_k2",
    "zneg1_gen_printed": "zneg1_gen",
}


def _const(v):
    return lambda order: fps.constant(v, order)


def _ints(values):
    return lambda order: fps.from_integers(values, order)


# --- registry structure ---------------------------------------------------


def test_registry_ids_unique_and_suites_populated():
    reg = registry()
    ids = [c.id for c in reg]
    assert len(ids) == len(set(ids))
    for s in SUITES:
        assert any(c.suite == s for c in reg)


def test_every_printed_form_is_tracked():
    printed = {c.id for c in registry() if c.expect is Expectation.FAIL_AS_PRINTED}
    assert printed == {row[0] for row in PRINTED_MISMATCHES}
    for pid, cid in COUNTERPARTS.items():
        assert lookup(cid).expect is Expectation.PASS, pid


def test_every_check_has_an_anchor_and_an_oracle_or_closed_form():
    for c in registry():
        assert c.paper_ref
        assert len(c.sides) >= 2


def test_lookup_unknown():
    with pytest.raises(UnknownIdentity):
        lookup("no_such_identity")
    with pytest.raises(KeyError):
        run("no_such_identity", 10)


def test_select_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("misc", 10)


def test_identity_check_validation():
    one = Side("one", _const(1))
    with pytest.raises(ValueError):
        IdentityCheck("x", "", "core", (one,))
    with pytest.raises(ValueError):
        IdentityCheck("x", "", "nowhere", (one, one))


# --- comparison semantics -------------------------------------------------


def test_compare_reports_earliest_pair_and_parameters():
    check = IdentityCheck(
        "toy", "", "core",
        (Side("a", lambda order, k: fps.from_integers([0, 1, 2, 3 + k], order)),
         Side("b", lambda order, k: fps.from_integers([0, 1, 2 + (k == 2), 3], order)),
         Side("c", lambda order, k: fps.from_integers([0, 1, 2, 3], order))),
        params=({"k": 1}, {"k": 2}),
    )
    mm = compare_sides(check, 10)
    assert (mm.n, mm.sides) == (2, ("a[k=2]", "b[k=2]"))
    assert mm.params == {"k": 2}


def test_compare_from_skips_constant_term():
    check = IdentityCheck("toy", "", "core", (Side("a", _const(1)), Side("b", _const(2))))
    assert compare_sides(check, 5) is None
    strict = IdentityCheck("toy", "", "core", (Side("a", _const(1)), Side("b", _const(2))),
                           compare_from=0)
    assert compare_sides(strict, 5).n == 0


def test_order_below_two_is_rejected():
    with pytest.raises(ValueError):
        run("euler_pent", 1)


def test_report_expectations():
    fail = IdentityCheck("toy", "", "core", (Side("a", _ints([0, 1])), Side("b", _ints([0, 2]))),
                         expect=Expectation.FAIL_AS_PRINTED)
    from kthpart.verify import run_check

    r = run_check(fail, 4)
    assert r.status is Status.FAIL and r.meets_expectation
    r = run_check(IdentityCheck("toy", "", "core", (Side("a", _const(1)), Side("b", _const(1))),
                                expect=Expectation.FAIL_AS_PRINTED), 4)
    assert r.status is Status.PASS and not r.meets_expectation
    assert not suite_passes([r])


# --- recorded audit findings ----------------------------------------------


@pytest.mark.parametrize("ident, n, lhs, rhs", PRINTED_MISMATCHES, ids=[r[0] for r in PRINTED_MISMATCHES])
def test_printed_forms_fail_at_recorded_exponent(ident, n, lhs, rhs):
    r = run(ident, 40)
    assert r.status is Status.FAIL and r.meets_expectation
    mm = r.first_mismatch
    assert (mm.n, mm.lhs.coeffs, mm.rhs.coeffs) == (n, lhs, rhs)
    assert run(COUNTERPARTS[ident], 40).status is Status.PASS


# --- determinism and monotonicity -----------------------------------------


def test_reports_are_deterministic():
    a = run_suite("lemmas", 30)
    b2 = run_suite("lemmas", 30)
    assert a == b2
    strip = lambda d: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in d["results"]]
    assert strip(reports_json("lemmas", 30, a)) == strip(reports_json("lemmas", 30, b2))


FAST_IDS = ["euler_pent", "gauss_sq", "zn_21", "lemma22", "uchimura", "agl", "gup_c", "coro1",
            "thm14", "qp", "coro39", "ztails", "minus_k1"]


@settings(max_examples=15)
@given(st.sampled_from(FAST_IDS), st.integers(2, 30))
def test_passing_is_monotone_in_order(ident, order):
    assert run(ident, order).status is Status.PASS


@settings(max_examples=15)
@given(st.sampled_from(PRINTED_MISMATCHES), st.integers(0, 20))
def test_first_mismatch_stable_under_higher_order(row, extra):
    ident, n = row[0], row[1]
    order = max(n + 2, 5) + extra
    assert run(ident, order).first_mismatch.n == n


def test_json_schema_is_strict():
    reports = [run("jtp_printed", 20), run("euler_pent", 20)]
    doc = json.loads(json.dumps(reports_json("classical", 20, reports), allow_nan=False))
    assert set(doc) == {"suite", "order", "results"}
    for r in doc["results"]:
        assert set(r) == {"id", "paper_ref", "status", "expected", "first_mismatch", "elapsed_ms"}
        assert isinstance(r["elapsed_ms"], int)
    mm = doc["results"][0]["first_mismatch"]
    assert set(mm) == {"n", "sides", "lhs", "rhs"}
    assert all(isinstance(x, str) for x in mm["lhs"] + mm["rhs"])
    assert doc["results"][1]["first_mismatch"] is None


# --- infinite sums --------------------------------------------------------


def test_qsum_checks_valuation_bound():
    with pytest.raises(b.ValuationBoundViolated):
        b.qsum(lambda n: fps.monomial(1, 0, n - 1, 20), 1, lambda n: n, 20)
    s = b.qsum(lambda n: fps.monomial(1, 0, n, 20), 1, lambda n: n, 20)
    assert s.integers() == [0] + [1] * 19


def test_qbin_in_n_is_incremental():
    got = [(n, s) for n, s in zip(range(6), b.qbin_in_n(2, 2, 25))]
    for _, (n, s) in got:
        assert s == fps.q_binomial(n, 2, 25)


# --- internals of the divisor-form family ---------------------------------

ORDER = 40


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_thm11_lines_agree_with_enumeration(k):
    line1 = b.thm11_line1(ORDER, k)
    assert line1 == b.thm11_line2(ORDER, k)
    assert line1 == b.thm11_dge(ORDER, k)
    assert line1 == b.ffw_enum(k, ORDER)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gen1_gen2_and_thm11_at_z_one(k):
    g1, g2 = b.gen1(ORDER, k), b.gen2(ORDER, k)
    assert g1 == g2
    # at z = 1: signed count of D(n) restricted to at least k parts
    restricted = stat_table(StatVariant.ffw_kz(k, restricted=True), ORDER - 1)
    assert fps.subst_z(g1, 1).integers()[1:] == [p(1) for p in restricted[1:]]
    # z d/dz at z = 1 gives the weighted sum from the divisor form
    assert fps.subst_z(fps.dz(g1), 1) == b.thm11_line1(ORDER, k)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_coro39_against_m_mc(m):
    definition = b.m_mc_definition(ORDER, m)
    assert definition == b.m_mc_dz(ORDER, m)
    if m == 1:
        assert definition == b.coro39_tails(ORDER)
        assert definition == fps.mul_z(b.coro39_square(ORDER), 1)
        assert definition == fps.mul_z(b.coro39_product(ORDER), 1)


# --- divisor-form values and the asymptotic table -------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_divisor_form_matches_enumeration(k):
    assert ffw_values(k, 60) == ffw_k_table(k, 60)


def test_ffw2_prefix_sum_form():
    assert ffw2_values(80) == ffw_k_table(2, 80)


def test_main_term_normalisations():
    import math

    assert main_term(100, 2) == pytest.approx(math.log(100) * 100)
    assert main_term(100, 3) == pytest.approx(-(100 ** 2) * math.log(100) / 4)
    assert main_term(100, 3, proof_normalization=False) == pytest.approx(-(100 ** 2) * math.log(100) / 2)


def test_sample_points_and_validation():
    assert sample_points(1000) == [100, 250, 500, 1000]
    with pytest.raises(ValueError):
        asym_table(1, 1000)
    with pytest.raises(ValueError):
        asym_table(2, 99)


def test_asym_rows_are_exact_values():
    rows = asym_table(2, 400)
    values = ffw_k_table(2, 100)
    assert rows[0].n == 40 and rows[0].value == values[40]
    assert all(r.ratio == pytest.approx(r.value / r.main_term) for r in rows)
