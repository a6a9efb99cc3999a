"""The registry of identity checks, grouped into suites."""

from __future__ import annotations

from functools import lru_cache, partial

from ..fps import mul_z, subst_z
from ..partitions import Convention
from . import builders as b
from .core import Expectation, IdentityCheck, Side, UnknownIdentity

FAIL = Expectation.FAIL_AS_PRINTED


def side(label: str, fn, oracle: bool = False, **fixed) -> Side:
    return Side(label, partial(fn, **fixed) if fixed else fn, oracle)


def ks(*values: int, name: str = "k") -> tuple[dict, ...]:
    return tuple({name: v} for v in values)


def grid(**axes) -> tuple[dict, ...]:
    out: list[dict] = [{}]
    for key, values in axes.items():
        out = [{**d, key: v} for d in out for v in values]
    return tuple(out)


def _restricted_at(order, k, z):
    return subst_z(b.ffw_kz_enum(order, k, restricted=True), z)


def _z_times(fn):
    def build(order, **kw):
        return mul_z(fn(order, **kw), 1)

    return build


def _classical() -> list[IdentityCheck]:
    return [
        IdentityCheck(
            "euler_pent", "(-1)^jq^{\\frac{j(3j+1)}{2}}", "classical",
            (side("pentagonal theta", b.pent), side("(q;q)_inf", b.euler_product),
             side("signed count of D(n)", b.euler_enum, True)),
            compare_from=0,
        ),
        IdentityCheck(
            "gauss_sq", "(-1)^jq^{j^2}", "classical",
            (side("square theta", b.sqtheta), side("(q;q)_inf/(-q;q)_inf", b.gauss_quotient),
             side("odd smallest part count", b.gauss_enum, True)),
            compare_from=0,
        ),
        IdentityCheck(
            "jtp_qq", "(a;ab)_\\infty(b;ab)_\\infty(ab;ab)_\\infty", "classical",
            (side("signed bilateral sum", b.jtp_sum, alpha=1, beta=1),
             side("triple product", b.jtp_product, alpha=1, beta=1),
             side("odd smallest part count", b.gauss_enum, True)),
            compare_from=0,
            note="the sum carries (-1)^n; the displayed form omits it",
        ),
        IdentityCheck(
            "jtp_q_q2", "(a;ab)_\\infty(b;ab)_\\infty(ab;ab)_\\infty", "classical",
            (side("signed bilateral sum", b.jtp_sum, alpha=1, beta=2),
             side("triple product", b.jtp_product, alpha=1, beta=2),
             side("signed count of D(n)", b.euler_enum, True)),
            compare_from=0,
        ),
        IdentityCheck(
            "jtp_printed", "a^{n(n+1)/2}b^{n(n-1)/2}", "classical",
            (side("unsigned bilateral sum", b.jtp_sum, alpha=1, beta=1, signed=0),
             side("triple product", b.jtp_product, alpha=1, beta=1)),
            compare_from=0, expect=FAIL,
        ),
        IdentityCheck(
            "euler_zq", "\\frac{(-z)^mq^{m(m-1)/2}}{(q;q)_m}", "classical",
            (side("(z;q)_inf", b.euler_zq_product), side("sum over m", b.euler_zq_sum),
             side("(1-z) * signed length count", b.euler_zq_enum, True)),
            compare_from=0,
        ),
        IdentityCheck(
            "binom_337", "\\frac{1}{(z;q)_N}", "classical",
            (side("q-binomial series", b.binom_series), side("1/(z;q)_N", b.binom_product),
             side("partitions into parts m+1..m+N", b.binom_counts, True)),
            params=grid(N=range(1, 6), m=range(0, 4)), compare_from=0,
        ),
        IdentityCheck(
            "binom_diff", "\\frac{q^j}{1-zq^{j}}", "classical",
            (side("derivative series", b.binom_diff_series), side("closed form", b.binom_diff_closed),
             side("length-weighted partition count", b.binom_diff_counts, True)),
            params=grid(N=range(1, 6), m=range(0, 4)), compare_from=0,
        ),
        IdentityCheck(
            "zn_21", "\\frac{z^{n}}{(q; q)_{n}}", "classical",
            (side("sum from n=0", b.zn_series), side("1/(q^k;q)_inf", b.inv_tail),
             side("partitions into parts >= k", b.parts_at_least, True)),
            params=ks(1, 2, 3, 4), compare_from=0,
        ),
        IdentityCheck(
            "zn_21_printed", "\\sum_{n=1}^{\\i}\\frac{z^{n}}{(q; q)_{n}}", "classical",
            (side("sum from n=1", b.zn_series, start=1), side("1/(q^k;q)_inf", b.inv_tail)),
            params=ks(1, 2, 3, 4), compare_from=0, expect=FAIL,
        ),
        IdentityCheck(
            "zsum_22", "\\frac{q^{n}}{1-zq^{n}}", "classical",
            (side("derivative series", b.zsum_series), side("Lambert form", b.zsum_closed),
             side("length-weighted partitions into parts >= k", b.zsum_counts, True)),
            params=ks(1, 2, 3, 4), compare_from=0,
        ),
    ]


def _lemmas() -> list[IdentityCheck]:
    return [
        IdentityCheck(
            "lemma21", "q^{n_1 + n_2 + \\cdots + n_k}", "lemmas",
            (side("subsets of {1..n}", b.lemma21_brute, True), side("q-binomial", b.lemma21_closed)),
            params=grid(n=range(0, 13), k=range(0, 5)), compare_from=0,
        ),
        IdentityCheck(
            "lemma22", "d_{\\geq k} (n) q^n", "lemmas",
            (side("sum n q^(kn)/(q;q)_n", b.lemma22_lhs),
             side("divisor sieve", b.lemma22_sieve, True),
             side("Lambert sum", b.lemma22_lambert)),
            params=ks(1, 2, 3, 4),
        ),
        IdentityCheck(
            "lemma23", "q^{i(i-1)/2 - ki}", "lemmas",
            (side("q-binomial sum", b.lemma23_lhs), side("divisor sieve form", b.lemma23_rhs, True)),
            params=ks(1, 2, 3, 4),
        ),
    ]


def _core() -> list[IdentityCheck]:
    return [
        IdentityCheck(
            "uchimura", "nq^n(q^{n+1};q)_\\i", "core",
            (side("tails sum", b.ffw_tails), side("alternating sum", b.uchimura_middle),
             side("Lambert sum", b.dsum), side("enumeration", b.ffw_enum_pos, True)),
        ),
        IdentityCheck(
            "ffw_eq_d", "FFW(n)=d(n)", "core",
            (side("enumeration", b.ffw_enum_pos, True), side("divisor sieve", b.divisor_sieve, True)),
        ),
        IdentityCheck(
            "ramanujan_c", "(-1)^{n-1}c^nq^{n(n+1)/2}", "core",
            (side("alternating sum", b.ramanujan_lhs), side("Lambert sum", b.ramanujan_rhs),
             side("sum of c^d over divisors", b.ramanujan_sieve, True)),
        ),
        IdentityCheck(
            "agl", "1-(q^{n+1};q)_\\i", "core",
            (side("enumeration", b.agl_enum, True), side("tails sum", b.agl_tails),
             side("alternating sum", b.agl_middle), side("1/(1-z) closed form", b.agl_closed)),
            note="the tails sum starts at n=0",
        ),
        IdentityCheck(
            "agl_printed", "\\sum_{n=1}^{\\infty}z^n\\left(1-(q^{n+1};q)_\\i \\right)", "core",
            (side("enumeration", b.agl_enum, True), side("tails sum from n=1", b.agl_tails, start=1)),
            expect=FAIL,
        ),
        IdentityCheck(
            "gup_c", "(-c)^{n}q^{n(n+1)/2}", "core",
            (side("enumeration", b.signed_c_enum, True), side("alternating sum", b.signed_c_middle),
             side("(c;q)_n Lambert form", b.signed_c_lambert)),
            note="the Lambert side holds with (c;q)_n",
        ),
        IdentityCheck(
            "gup_c_printed", "(-c;q)_n", "core",
            (side("enumeration", b.signed_c_enum, True),
             side("(-c;q)_n Lambert form", b.signed_c_lambert, printed=True)),
            expect=FAIL,
        ),
        IdentityCheck(
            "dilcher", "\\binom{n}{k}q^n(q^{n+1};q)_\\infty", "core",
            (side("binomial tails sum", b.dilcher_lhs),
             side("shifted triangular sum", b.dilcher_middle),
             side("nested Lambert sums", b.dilcher_nested),
             side("enumeration", b.dilcher_enum, True)),
            params=ks(1, 2, 3, 4),
            note="prefactor q^(-k(k-1)/2); the displayed exponent has the opposite sign",
        ),
        IdentityCheck(
            "dilcher_printed", "q^{k(k-1)/2}\\sum_{m=1}^{\\infty}", "core",
            (side("binomial tails sum", b.dilcher_lhs),
             side("shifted triangular sum as displayed", b.dilcher_middle, printed=True)),
            params=ks(1, 2, 3, 4), expect=FAIL,
        ),
        IdentityCheck(
            "thm11", "(-1)^k q^{k(k-1)/2}", "core",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("q-binomial tails", b.thm11_line1), side("divisor form", b.thm11_line2),
             side("d_{>=k-i} form", b.thm11_dge)),
            params=ks(1, 2, 3, 4, 5),
        ),
        IdentityCheck(
            "thm11_proof_final", "-\\sum_{i = 1}^k (-1)^i", "core",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("index range 1..k", b.thm11_line2, final=True)),
            params=ks(1, 2, 3, 4, 5), expect=FAIL,
        ),
        IdentityCheck(
            "cor12_ffw2", "\\sum_{j=1}^{n-1}d(j)-d(n)+1", "core",
            (side("closed form", b.ffw2_closed, True),
             side("enumeration", lambda order: b.ffw_enum(2, order), True),
             side("divisor form", b.thm11_line2, k=2)),
        ),
        IdentityCheck(
            "cor12_ffw3", "\\floor*{\\frac{n - i - 1}{2}} - 1", "core",
            (side("closed form", b.ffw3_closed, True),
             side("enumeration", lambda order: b.ffw_enum(3, order), True),
             side("divisor form", b.thm11_line2, k=3)),
        ),
        IdentityCheck(
            "thm13", "(q;q)_{m}(1-q^{m-j})", "core",
            (side("double sum", b.thm13), side("enumeration", lambda order, k: b.ffw_enum(k, order), True)),
            params=ks(1, 2, 3, 4, 5),
        ),
        IdentityCheck(
            "remark", "\\sum_{j=0}^{k-1}\\sum_{m=k}^{\\infty}", "core",
            (side("double sum", b.thm13), side("divisor form", b.thm11_line2),
             side("enumeration", lambda order, k: b.ffw_enum(k, order), True)),
            params=ks(1, 2, 3, 4, 5),
        ),
    ]


def _general() -> list[IdentityCheck]:
    par = partial
    return [
        IdentityCheck(
            "gen1", "(q;q)_{n-k}(zq^{n-k+1};q)_k", "general",
            (side("enumeration, at least k parts", b.ffw_kz_enum, True),
             side("alternating sum", b.gen1), side("q-binomial tails", b.gen1_qbin)),
            params=ks(1, 2, 3, 4),
            note="the series only sees partitions with at least k parts",
        ),
        IdentityCheck(
            "gen1_full", "(q;q)_{n-k}(zq^{n-k+1};q)_k", "general",
            (side("enumeration, all of D(n)", b.ffw_kz_enum, True, restricted=False),
             side("series plus short partitions", b.ffw_kz_full_series)),
            params=ks(1, 2, 3, 4),
        ),
        IdentityCheck(
            "gen1_printed", "\\sum_{\\pi \\in \\mathcal{D}(n)} (-1)^{\\# (\\pi)} z^{s_k(\\pi)}", "general",
            (side("enumeration, all of D(n)", b.ffw_kz_enum, True, restricted=False),
             side("alternating sum", b.gen1)),
            params=ks(1, 2, 3, 4), expect=FAIL,
        ),
        IdentityCheck(
            "gen2", "\\frac{(zq^{i+1})^j}{(q;q)_j}", "general",
            (side("enumeration, at least k parts", b.ffw_kz_enum, True),
             side("product form", b.gen2), side("alternating sum", b.gen1)),
            params=ks(1, 2, 3, 4),
        ),
        IdentityCheck(
            "coro1", "(q;q)_{\\infty}-\\frac{(q;q)_\\infty}{(-q;q)_{\\infty}}", "general",
            (side("enumeration", par(_restricted_at, k=1, z=-1), True),
             side("alternating sum", b.coro1_middle), side("product difference", b.coro1_closed)),
        ),
        IdentityCheck(
            "alladi", "if n = j^2", "general",
            (side("enumeration, (-1)^(#-1)", b.parity_enum, True, parity="odd",
                  convention=Convention.SHARP_MINUS_ONE),
             side("DP, (-1)^(#-1)", b.parity_dp, True, parity="odd",
                  convention=Convention.SHARP_MINUS_ONE),
             side("closed form", b.alladi_closed), side("(1 - square theta)/2", b.alladi_theta)),
        ),
        IdentityCheck(
            "alladi_printed", "s(\\pi) \\textup{ odd}}} (-1)^{\\# (\\pi)}", "general",
            (side("enumeration, (-1)^#", b.parity_enum, True, parity="odd",
                  convention=Convention.SHARP),
             side("closed form", b.alladi_closed)),
            expect=FAIL,
        ),
        IdentityCheck(
            "thm14", "(-1)^k-(-1)^{j}", "general",
            (side("closed form", b.thm14_closed),
             side("enumeration", b.parity_enum, True, parity="even", convention=Convention.SHARP),
             side("smallest-part DP", b.parity_dp, True, parity="even", convention=Convention.SHARP),
             side("pentagonal minus half square theta", b.thm14_series)),
        ),
        IdentityCheck(
            "thm34_printed", "n \\mbox{ is not square}", "general",
            (side("closed form as displayed", b.thm34_printed_closed),
             side("enumeration", b.parity_enum, True, parity="even", convention=Convention.SHARP)),
            expect=FAIL,
        ),
        IdentityCheck(
            "z1", "(q;q)_\\infty-\\frac{2q-1}{q-1}", "general",
            (side("enumeration over D_2(n)", par(_restricted_at, k=2, z=1), True),
             side("alternating sum", b.d2_sum), side("closed form", b.z1_closed),
             side("coefficient display", b.z1_display)),
        ),
        IdentityCheck(
            "coro2222", "(q;q^2)_\\infty(q^2;q)_\\infty", "general",
            (side("enumeration over D_2(n)", par(_restricted_at, k=2, z=-1), True),
             side("alternating sum", b.coro2222_middle), side("product difference", b.coro2222_closed)),
        ),
        IdentityCheck(
            "qp", "(-1)^{\\ell-1}+(-1)^{j}", "general",
            (side("closed form", b.thm37_closed),
             side("enumeration over D_2(n)", par(_restricted_at, k=2, z=-1), True),
             side("pentagonal minus theta/(1-q)", b.thm37_theta)),
        ),
        IdentityCheck(
            "genth", "\\frac{n(zq^{j+1})^n}{(q;q)_n}", "general",
            (side("enumeration", b.genth_enum, True), side("nested sum", b.genth_formula1),
             side("product form", b.genth_formula2)),
            params=ks(1, 2, 3),
            note="nested sum uses z^k (-1)^n; product form carries z in front of its bracket",
        ),
        IdentityCheck(
            "genth_printed", "z^{k-1}\\sum_{j=0}^{k-1}\\sum_{n=k}^{\\infty}\\frac{(-1)^{n-1}", "general",
            (side("z * enumeration", _z_times(b.genth_enum), True),
             side("z * nested sum as displayed", _z_times(partial(b.genth_formula1, printed=True))),
             side("z * product form as displayed", b.genth_formula2)),
            params=ks(1, 2, 3), expect=FAIL,
        ),
        IdentityCheck(
            "coro39", "\\left(1-zq^{n}\\right)^2", "general",
            (side("enumeration of (-1)^(#-1) s z^s", lambda order: b.neg(b.power_enum(order, 1)), True),
             side("tails sum", b.coro39_tails),
             side("z * squared denominator sum", _z_times(b.coro39_square)),
             side("z * product form", _z_times(b.coro39_product))),
        ),
        IdentityCheck(
            "coro39_printed", "(-1)^{\\# (\\pi)}s(\\pi)z^{s(\\pi)}", "general",
            (side("enumeration of (-1)^# s z^s", lambda order: b.power_enum(order, 1), True),
             side("tails sum", b.coro39_tails),
             side("squared denominator sum", b.coro39_square),
             side("product form", b.coro39_product)),
            expect=FAIL,
        ),
        IdentityCheck(
            "coro310", "\\frac{q^{n}}{1+q^{n}}", "general",
            (side("enumeration", lambda order: b.power_enum(order, 1, zval=-1), True),
             side("squared denominator sum", b.coro39_square, zval=-1),
             side("product form", b.coro310_product)),
        ),
        IdentityCheck(
            "m_mc", "n^mc^nq^n(q^{n+1};q)_\\infty", "general",
            (side("definition", b.m_mc_definition), side("minus dz^m of the k=1 series", b.m_mc_dz),
             side("enumeration", lambda order, m: b.neg(b.power_enum(order, m)), True)),
            params=ks(0, 1, 2, 3, name="m"),
        ),
    ]


def _tails() -> list[IdentityCheck]:
    zneg = partial(b.ztails_formula, zval=-1)
    return [
        IdentityCheck(
            "ztails", "z^{s_k (\\pi) - s_{k - 1} (\\pi) - 1}", "tails",
            (side("enumeration", b.tails_enum, True), side("tails form", b.ztails_formula),
             side("sums interchanged", b.ztails_swapped)),
            params=ks(2, 3, 4),
        ),
        IdentityCheck(
            "minus", "(s_k (\\pi) - s_{k - 1} (\\pi))", "tails",
            (side("enumeration", b.diff_enum, True), side("q-binomial tails", b.minus_formula),
             side("z tails at z=1", b.ztails_formula, zval=1)),
            params=ks(2, 3, 4),
        ),
        IdentityCheck(
            "minus_k1", "(s_k (\\pi) - s_{k - 1} (\\pi))", "tails",
            (side("enumeration", b.diff_enum, True, k=1), side("q-binomial tails", b.minus_formula, k=1)),
        ),
        IdentityCheck(
            "uchimura_tails", "\\sum_{n = 1}^\\i ((q^n; q)_\\i - 1)", "tails",
            (side("enumeration", lambda order: b.ffw_enum(1, order), True),
             side("tails sum", b.uchimura_tails),
             side("minus divisor sieve", lambda order: b.neg(b.divisor_sieve(order)), True)),
        ),
        IdentityCheck(
            "largest_part", "L(\\pi)", "tails",
            (side("enumeration", b.largest_part_enum, True), side("q-binomial sum", b.largest_part_series)),
            params=ks(1, 2, 3, name="length"),
        ),
        IdentityCheck(
            "recursive", "\\textup{FFW}_{k - 1} (n) q^n", "tails",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("recursion on enumerated FFW_{k-1}", b.recursive_rhs, base="enum"),
             side("recursion on divisor-form FFW_{k-1}", b.recursive_rhs, base="series")),
            params=ks(2, 3, 4),
        ),
        IdentityCheck(
            "thm44_telescoped", "\\sum_{\\ell = 2}^\\i (-1)^{\\ell - 1}", "tails",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("telescoped tails form", b.thm44_telescoped)),
            params=ks(2, 3, 4),
            note="l in 2..k, inner sums from n=l and n=l-1, minus the divisor sum",
        ),
        IdentityCheck(
            "thm44_corrected", "\\sum_{\\ell = 2}^\\i (-1)^{\\ell - 1}", "tails",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("sign (-1)^(l-1), inner sums from n=l", b.thm44_reading)),
            params=ks(2, 3, 4), expect=FAIL,
            note="audited reading; fails, so kept as audit only",
        ),
        IdentityCheck(
            "thm44_printed", "(-1)^{\\ell (\\ell - 1)/2}", "tails",
            (side("enumeration", lambda order, k: b.ffw_enum(k, order), True),
             side("form as displayed", b.thm44_reading, printed=True)),
            params=ks(2, 3, 4), expect=FAIL,
        ),
        IdentityCheck(
            "zneg1_k2", "(1 - q^{n - 1})((q^n; q)_\\i - 1)", "tails",
            (side("enumeration", b.zneg1_enum, True, k=2),
             side("z tails at z=-1", b.tails_enum, True, k=2, zval=-1),
             side("corrected closed sum", b.zneg1_k2_corrected)),
        ),
        IdentityCheck(
            "zneg1_k2_printed", "\\frac{q}{1 - q}\\sum_{n = 2}^\\i", "tails",
            (side("enumeration", b.zneg1_enum, True, k=2), side("display", b.zneg1_k2_printed)),
            expect=FAIL,
        ),
        IdentityCheck(
            "zneg1_gen", "\\sum_{n = m + 1}^\\i (-1)^n ((q^n; q)_\\i - 1)", "tails",
            (side("enumeration", b.zneg1_enum, True), side("z tails at z=-1", zneg)),
            params=ks(2, 3),
        ),
        IdentityCheck(
            "zneg1_gen_printed", "(-1)^k q^{(k - 1)(k - 2)/2} \\sum_{m = k - 1}^\\i q^m", "tails",
            (side("enumeration", b.zneg1_enum, True),
             side("display", partial(b.ztails_formula, zval=-1, alt_m=True))),
            params=ks(2, 3), expect=FAIL,
        ),
    ]


@lru_cache(maxsize=1)
def _build() -> tuple[IdentityCheck, ...]:
    checks = _classical() + _lemmas() + _core() + _general() + _tails()
    ids = [c.id for c in checks]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids")
    return tuple(checks)


def registry() -> list[IdentityCheck]:
    return list(_build())


def lookup(identity: str) -> IdentityCheck:
    for c in _build():
        if c.id == identity:
            return c
    raise UnknownIdentity(identity)
