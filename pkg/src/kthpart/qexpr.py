"""A small expression language over truncated q-series.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' int)? | '-' factor
    atom   := int | 'q' | 'z' | '(' expr ')' | poch | qbin | name args?
    poch   := 'poch' '(' mono ';' 'q' ('^' int)? ';' (int | 'inf') ')'
    mono   := '-'? (int | ('z' ('^' int)?)? ('q' ('^' int)?)?)
    qbin   := 'qbin' '(' int ',' int ')'

``x^-1`` is accepted and means ``1/x``; other negative powers are rejected.
Identifiers spelled only with ``z`` and ``q`` (``zq``, ``qz``) split into
single letters so that ``poch(zq;q;inf)`` reads naturally.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Union

from . import fps
from .fps import INFINITE, InvalidPochSpec, NonUnitConstantTerm, PochSpec, ThetaKind, TruncatedSeries


class ParseError(SyntaxError):
    """Malformed input; ``offset`` is a byte offset into the UTF-8 text."""

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        super().__init__(message)
        self.offset = offset
        self.expected = expected

    def __str__(self) -> str:
        return f"byte {self.offset}: {self.msg}"


class ExponentOverflow(OverflowError):
    pass


class NonUnitDivisor(NonUnitConstantTerm):
    pass


class UnknownName(NameError):
    pass


class BadArguments(ValueError):
    pass


__all__ = [
    "Add", "BadArguments", "Div", "ExponentOverflow", "Expr", "IntLit", "InvalidPochSpec",
    "Mul", "Named", "Neg", "NonUnitDivisor", "ParseError", "Poch", "Pow", "QBin", "Sub",
    "UnknownName", "Var", "evaluate", "expand", "parse", "to_text",
]


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class IntLit:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("literals are nonnegative; use Neg")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if self.name not in ("q", "z"):
            raise ValueError("variables are q and z")


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("Pow exponent must be nonnegative")


@dataclass(frozen=True)
class Poch:
    """``(coeff z^zexp q^qexp; q^step)_count``; ``count=None`` is infinite."""

    coeff: int = 1
    zexp: int = 0
    qexp: int = 1
    step: int = 1
    count: int | None = None


@dataclass(frozen=True)
class QBin:
    n: int
    k: int


@dataclass(frozen=True)
class Named:
    name: str
    args: tuple["Expr", ...] | None = None


Expr = Union[IntLit, Var, Add, Sub, Mul, Div, Neg, Pow, Poch, QBin, Named]


# ---------------------------------------------------------------------------
# lexer


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, a punctuation character, or EOF
    text: str
    pos: int  # character offset


_PUNCT = set("+-*/^();,")


def _tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], i))
            i = j
        elif c.isascii() and (c.isalpha() or c == "_"):
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if set(word) <= {"q", "z"}:
                out.extend(Token("NAME", ch, i + d) for d, ch in enumerate(word))
            else:
                out.append(Token("NAME", word, i))
            i = j
        elif c in _PUNCT:
            out.append(Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", _byte(text, i), frozenset({"token"}))
    out.append(Token("EOF", "", n))
    return out


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


# ---------------------------------------------------------------------------
# parser


_LIMIT = sys.maxsize


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: set[str]) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        exp = ", ".join(repr(x) for x in sorted(expected))
        return ParseError(f"expected {exp}; found {found}", _byte(self.text, t.pos), frozenset(expected))

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            raise self.fail({text or kind})
        return t

    def integer(self, allow_negative: bool = False) -> int:
        neg = allow_negative and self.accept("-") is not None
        t = self.tok
        if t.kind != "INT":
            raise self.fail({"INT"})
        self.i += 1
        v = int(t.text)
        if v > _LIMIT:
            raise ExponentOverflow(f"byte {_byte(self.text, t.pos)}: integer {t.text} is out of range")
        return -v if neg else v

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "EOF":
            raise self.fail({"+", "-", "*", "/", "^", "EOF"})
        return e

    def expr(self) -> Expr:
        e = self.term()
        while True:
            if self.accept("+"):
                e = Add(e, self.term())
            elif self.accept("-"):
                e = Sub(e, self.term())
            else:
                return e

    def term(self) -> Expr:
        e = self.factor()
        while True:
            if self.accept("*"):
                e = Mul(e, self.factor())
            elif self.accept("/"):
                e = Div(e, self.factor())
            else:
                return e

    def factor(self) -> Expr:
        if self.accept("-"):
            return Neg(self.factor())
        base = self.atom()
        if self.accept("^"):
            pos = self.tok.pos
            e = self.integer(allow_negative=True)
            if e == -1:
                return Div(IntLit(1), base)
            if e < 0:
                raise ParseError("negative powers other than -1 are not supported",
                                 _byte(self.text, pos), frozenset({"INT"}))
            return Pow(base, e)
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return IntLit(int(t.text))
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "NAME":
            self.i += 1
            if t.text in ("q", "z"):
                return Var(t.text)
            if t.text == "poch":
                return self.poch()
            if t.text == "qbin":
                self.expect("(")
                n = self.integer()
                self.expect(",")
                k = self.integer()
                self.expect(")")
                return QBin(n, k)
            args = None
            if self.accept("("):
                items = [self.expr()]
                while self.accept(","):
                    items.append(self.expr())
                self.expect(")")
                args = tuple(items)
            return Named(t.text, args)
        raise self.fail({"INT", "q", "z", "(", "-", "NAME"})

    def _var_power(self, name: str) -> int | None:
        if not self.accept("NAME", name):
            return None
        if self.accept("^"):
            return self.integer()
        return 1

    def poch(self) -> Poch:
        self.expect("(")
        sign = -1 if self.accept("-") else 1
        if self.tok.kind == "INT":
            coeff, zexp, qexp = sign * self.integer(), 0, 0
        else:
            zexp = self._var_power("z")
            self.accept("*")
            qexp = self._var_power("q")
            if zexp is None and qexp is None:
                raise self.fail({"INT", "z", "q"})
            coeff, zexp, qexp = sign, zexp or 0, qexp or 0
        self.expect(";")
        self.expect("NAME", "q")
        step = self.integer() if self.accept("^") else 1
        self.expect(";")
        if self.accept("NAME", "inf"):
            count = None
        else:
            count = self.integer()
        self.expect(")")
        return Poch(coeff, zexp, qexp, step, count)


MAX_DEPTH = 400


def _depth(e: Expr) -> int:
    best, stack = 0, [(e, 1)]
    while stack:
        node, d = stack.pop()
        best = max(best, d)
        for f in ("left", "right", "operand", "base"):
            child = getattr(node, f, None)
            if child is not None:
                stack.append((child, d + 1))
        for a in getattr(node, "args", None) or ():
            stack.append((a, d + 1))
    return best


def parse(text: str) -> Expr:
    """Parse ``text``; trees deeper than ``MAX_DEPTH`` are rejected."""
    p = _Parser(text)
    try:
        e = p.parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", _byte(text, p.tok.pos)) from None
    if _depth(e) > MAX_DEPTH:
        raise ParseError(f"expression nested deeper than {MAX_DEPTH}", 0)
    return e


# ---------------------------------------------------------------------------
# canonical printer


def _mono_text(p: Poch) -> str:
    parts = ""
    if p.zexp:
        parts += "z" if p.zexp == 1 else f"z^{p.zexp}"
    if p.qexp:
        parts += "q" if p.qexp == 1 else f"q^{p.qexp}"
    if not parts or abs(p.coeff) != 1:
        return str(p.coeff) if not parts else f"{p.coeff}{parts}"
    return ("-" if p.coeff < 0 else "") + parts


def to_text(e: Expr) -> str:
    """Fully parenthesised text that parses back to the same tree."""
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, (Add, Sub, Mul, Div)):
        op = {Add: "+", Sub: "-", Mul: "*", Div: "/"}[type(e)]
        return f"({to_text(e.left)} {op} {to_text(e.right)})"
    if isinstance(e, Neg):
        return f"-{to_text(e.operand)}"
    if isinstance(e, Pow):
        base = to_text(e.base)
        if isinstance(e.base, (Neg, Pow)):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    if isinstance(e, Poch):
        step = "q" if e.step == 1 else f"q^{e.step}"
        count = "inf" if e.count is None else str(e.count)
        return f"poch({_mono_text(e)};{step};{count})"
    if isinstance(e, QBin):
        return f"qbin({e.n},{e.k})"
    if isinstance(e, Named):
        if e.args is None:
            return e.name
        return f"{e.name}(" + ",".join(to_text(a) for a in e.args) + ")"
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------------------
# evaluation


def _monomial_power(arg: Expr, var: str) -> int:
    if isinstance(arg, IntLit) and arg.value == 1:
        return 0
    if isinstance(arg, Var) and arg.name == var:
        return 1
    if isinstance(arg, Pow) and isinstance(arg.base, Var) and arg.base.name == var:
        return arg.exponent
    raise BadArguments(f"expected a power of {var}, got {to_text(arg)}")


def _int_arg(arg: Expr) -> int:
    if isinstance(arg, IntLit):
        return arg.value
    raise BadArguments(f"expected an integer, got {to_text(arg)}")


def _named(e: Named, order: int) -> TruncatedSeries:
    args = e.args or ()
    plain = {
        "dsum": lambda: fps.divisor_series(1, order),
        "pent": lambda: fps.theta(ThetaKind.PENTAGONAL, order),
        "sqtheta": lambda: fps.theta(ThetaKind.SQUARE, order),
    }
    if e.name in plain:
        if args:
            raise BadArguments(f"{e.name} takes no arguments")
        return plain[e.name]()
    if e.name == "dsum_ge":
        if len(args) != 1:
            raise BadArguments("dsum_ge(k) takes one integer")
        k = _int_arg(args[0])
        if k < 1:
            raise BadArguments("dsum_ge(k) needs k >= 1")
        return fps.divisor_series(k, order)
    if e.name == "geo":
        if len(args) != 2:
            raise BadArguments("geo(z^a, q^b) takes two monomials")
        a = _monomial_power(args[0], "z")
        b = _monomial_power(args[1], "q")
        try:
            return fps.geometric(a, b, order)
        except fps.ZeroQPower as exc:
            raise BadArguments(str(exc)) from None
    raise UnknownName(e.name)


def evaluate(e: Expr, order: int) -> TruncatedSeries:
    if order < 1:
        raise ValueError("order must be positive")
    if isinstance(e, IntLit):
        return fps.constant(e.value, order)
    if isinstance(e, Var):
        return fps.monomial(1, 0, 1, order) if e.name == "q" else fps.monomial(1, 1, 0, order)
    if isinstance(e, Add):
        return fps.add(evaluate(e.left, order), evaluate(e.right, order))
    if isinstance(e, Sub):
        return fps.sub(evaluate(e.left, order), evaluate(e.right, order))
    if isinstance(e, Mul):
        return fps.mul(evaluate(e.left, order), evaluate(e.right, order))
    if isinstance(e, Div):
        num = evaluate(e.left, order)
        den = evaluate(e.right, order)
        try:
            inv = fps.invert(den)
        except NonUnitConstantTerm as exc:
            raise NonUnitDivisor(f"cannot divide by {to_text(e.right)}: {exc}") from None
        return fps.mul(num, inv)
    if isinstance(e, Neg):
        return fps.neg(evaluate(e.operand, order))
    if isinstance(e, Pow):
        return fps.power(evaluate(e.base, order), e.exponent)
    if isinstance(e, Poch):
        count = INFINITE if e.count is None else e.count
        return fps.pochhammer(PochSpec(e.coeff, e.zexp, e.qexp, e.step, count), order)
    if isinstance(e, QBin):
        return fps.q_binomial(e.n, e.k, order)
    if isinstance(e, Named):
        return _named(e, order)
    raise TypeError(f"not an expression: {e!r}")


def expand(text: str, order: int) -> TruncatedSeries:
    return evaluate(parse(text), order)
