from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kthpart import fps, qexpr
from kthpart.qexpr import (
    Add, Div, IntLit, Mul, Named, Neg, Poch, Pow, QBin, Sub, Var, evaluate, parse, to_text,
)
from oracles import Bi, bi_poch, box_partitions, divisors

GOLDEN = Path(__file__).parent / "golden" / "qexpr"
ORDER = 9


def dense(s):
    return [p.coeffs for p in s]


# --- an independent evaluator over the naive bivariate oracle -------------


def _theta(order, square):
    t = {(0, 0): 1}
    for j in range(1, order):
        sign = (-1) ** j
        exps = (j * j, j * j) if square else (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2)
        for e in exps:
            t[(e, 0)] = t.get((e, 0), 0) + sign
    return Bi(t, order)


def oracle(e, order):
    if isinstance(e, IntLit):
        return Bi.const(e.value, order)
    if isinstance(e, Var):
        return Bi({(1, 0) if e.name == "q" else (0, 1): 1}, order)
    if isinstance(e, Add):
        return oracle(e.left, order) + oracle(e.right, order)
    if isinstance(e, Sub):
        return oracle(e.left, order) - oracle(e.right, order)
    if isinstance(e, Mul):
        return oracle(e.left, order) * oracle(e.right, order)
    if isinstance(e, Div):
        return oracle(e.left, order) * oracle(e.right, order).inverse()
    if isinstance(e, Neg):
        return -oracle(e.operand, order)
    if isinstance(e, Pow):
        acc = Bi.const(1, order)
        for _ in range(e.exponent):
            acc = acc * oracle(e.base, order)
        return acc
    if isinstance(e, Poch):
        return bi_poch(e.coeff, e.zexp, e.qexp, e.step, e.count, order)
    if isinstance(e, QBin):
        return Bi({(i, 0): c for i, c in enumerate(box_partitions(e.n, e.k, order))}, order)
    if isinstance(e, Named):
        if e.name == "pent":
            return _theta(order, False)
        if e.name == "sqtheta":
            return _theta(order, True)
        if e.name == "dsum":
            return Bi({(n, 0): divisors(n) for n in range(1, order)}, order)
    raise AssertionError(f"oracle cannot evaluate {e!r}")


# --- random syntax trees --------------------------------------------------

poch_nodes = st.builds(
    Poch, st.sampled_from([1, -1]), st.integers(0, 2), st.integers(1, 3), st.integers(1, 2),
    st.one_of(st.none(), st.integers(0, 4)),
)
leaves = st.one_of(
    st.integers(0, 3).map(IntLit),
    st.sampled_from([Var("q"), Var("z")]),
    poch_nodes,
    st.builds(lambda n, k: QBin(n, k), st.integers(0, 5), st.integers(0, 5)),
    st.sampled_from([Named("pent"), Named("sqtheta"), Named("dsum")]),
)
# denominators whose constant term is 1
unit_denominators = st.one_of(
    poch_nodes,
    st.builds(lambda p: Sub(IntLit(1), Mul(Var("q"), p)), poch_nodes),
)


def trees(depth):
    if depth <= 1:
        return leaves
    sub = trees(depth - 1)
    return st.one_of(
        leaves,
        st.builds(Add, sub, sub),
        st.builds(Sub, sub, sub),
        st.builds(Mul, sub, sub),
        st.builds(Div, sub, unit_denominators),
        st.builds(Neg, sub),
        st.builds(Pow, sub, st.integers(0, 3)),
    )


exprs = trees(5)


@settings(max_examples=50)
@given(exprs)
def test_evaluation_is_a_homomorphism(e):
    got = evaluate(e, ORDER)
    assert dense(got) == oracle(e, ORDER).dense()
    if isinstance(e, (Add, Sub, Mul)):
        op = {Add: fps.add, Sub: fps.sub, Mul: fps.mul}[type(e)]
        assert got == op(evaluate(e.left, ORDER), evaluate(e.right, ORDER))


@given(exprs)
def test_canonical_printer_round_trip(e):
    text = to_text(e)
    assert parse(text) == e
    assert to_text(parse(text)) == text


@pytest.mark.parametrize("n", range(9))
def test_qbin_matches_q_binomial(n):
    for k in range(n + 1):
        assert evaluate(parse(f"qbin({n},{k})"), 20) == fps.q_binomial(n, k, 20)


# --- parser behaviour -----------------------------------------------------


def test_parse_examples():
    assert parse("poch(q;q;inf)") == Poch(1, 0, 1, 1, None)
    assert parse("qbin(4,2) * (1 - z*q)") == Mul(QBin(4, 2), Sub(IntLit(1), Mul(Var("z"), Var("q"))))
    assert parse("poch(-zq^3;q^2;7)") == Poch(-1, 1, 3, 2, 7)
    assert parse("poch(z^2*q;q;inf)") == Poch(1, 2, 1, 1, None)


def test_precedence_and_associativity():
    assert parse("1 - 2 - 3") == Sub(Sub(IntLit(1), IntLit(2)), IntLit(3))
    assert parse("q / z / 2") == Div(Div(Var("q"), Var("z")), IntLit(2))
    assert parse("-q^2") == Neg(Pow(Var("q"), 2))
    assert parse("2 * -q") == Mul(IntLit(2), Neg(Var("q")))
    assert parse("1 + q * z") == Add(IntLit(1), Mul(Var("q"), Var("z")))
    assert parse("  q\t^ 2\n") == Pow(Var("q"), 2)


def test_inverse_power_is_division():
    assert parse("(1-q)^-1") == Div(IntLit(1), Sub(IntLit(1), Var("q")))


def test_named_calls():
    assert parse("dsum_ge(3)") == Named("dsum_ge", (IntLit(3),))
    assert parse("geo(z^2, q)") == Named("geo", (Pow(Var("z"), 2), Var("q")))


@pytest.mark.parametrize("text, offset", [
    ("poch(z;q;inf", 12),
    ("q +", 3),
    ("qbin(4)", 6),
    ("é + q", 0),
    ("q + é", 4),
    ("\u2003q +", 6),  # a three-byte space shifts the offset
    ("", 0),
])
def test_parse_errors_carry_byte_offsets(text, offset):
    with pytest.raises(qexpr.ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert isinstance(info.value, SyntaxError)
    assert f"byte {offset}" in str(info.value)


def test_expected_token_set():
    with pytest.raises(qexpr.ParseError) as info:
        parse("poch(z;q;")
    assert info.value.expected == frozenset({"INT"})


def test_exponent_overflow():
    with pytest.raises(OverflowError):
        parse("q^" + "9" * 30)
    with pytest.raises(qexpr.ExponentOverflow):
        parse("poch(q;q;" + "9" * 30 + ")")


def test_literals_are_unbounded():
    big = 10 ** 40
    assert evaluate(parse(str(big)), 2).integers() == [big, 0]


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(qexpr.ParseError):
        parse("(" * 3000 + "q" + ")" * 3000)
    with pytest.raises(qexpr.ParseError):
        parse(" + ".join(["q"] * (qexpr.MAX_DEPTH + 5)))


# --- evaluation -----------------------------------------------------------


def test_evaluation_examples():
    assert qexpr.expand("poch(q;q;inf)", 8).integers() == [1, -1, -1, 0, 0, 1, 0, 1]
    assert qexpr.expand("1/(1-q) * (1-q)", 10) == fps.one(10)
    assert qexpr.expand("geo(z, q^2)", 5) == fps.geometric(1, 2, 5)
    assert qexpr.expand("dsum_ge(2)", 10) == fps.divisor_series(2, 10)


@pytest.mark.parametrize("text, exc", [
    ("1/(1-z)", qexpr.NonUnitDivisor),
    ("1/(2 + q)", qexpr.NonUnitDivisor),
    ("frobnicate", qexpr.UnknownName),
    ("poch(z;q;inf)", qexpr.InvalidPochSpec),
    ("poch(2;q;3)", qexpr.InvalidPochSpec),
    ("geo(z, 1)", qexpr.BadArguments),
    ("geo(q, q)", qexpr.BadArguments),
    ("dsum(2)", qexpr.BadArguments),
    ("dsum_ge(0)", qexpr.BadArguments),
    ("dsum_ge(q)", qexpr.BadArguments),
])
def test_evaluation_errors(text, exc):
    with pytest.raises(exc):
        qexpr.expand(text, 6)


def test_non_unit_divisor_is_a_series_error():
    assert issubclass(qexpr.NonUnitDivisor, fps.NonUnitConstantTerm)


# --- golden corpus --------------------------------------------------------


def _cases():
    out = []
    for line in (GOLDEN / "cases.tsv").read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            name, order, text = line.split("\t")
            out.append((name, int(order), text))
    return out


CASES = _cases()


def test_golden_corpus_size():
    assert len(CASES) >= 20


@pytest.mark.parametrize("name, order, text", CASES, ids=[c[0] for c in CASES])
def test_golden_expansion(name, order, text):
    got = fps.serialize(qexpr.expand(text, order))
    assert got == (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
    tree = parse(text)
    if not isinstance(tree, Named) and "geo" not in text and "dsum_ge" not in text:
        assert dense(qexpr.expand(text, order)) == oracle(tree, order).dense()
