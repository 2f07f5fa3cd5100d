"""Recursive-descent parser for expressions in U(g (x) A).

Grammar::

    expr    := sign? term (('+' | '-') term)*
    term    := RATIONAL ('*'? factor)* | factor ('*'? factor)*
    factor  := primary ('^(' INT ')' | '^' INT)?
    primary := GEN ':' LABEL
             | 'binom(' ('h1' | 'h2') (('-' | '+') INT)? ',' INT ')'
             | ('X1' | 'Xm1' | 'H1' | 'H2') MULTISET
             | ('X2' | 'Xm2' | 'X3' | 'Xm3') TUPLE
             | ('p1' | 'q1') '(' MULTISET ',' MULTISET ')'
             | 'p(' MULTISET ',' MULTISET ',' TUPLE ')'
             | '(' expr ')'
    MULTISET := '{' (LABEL (':' INT)? (',' LABEL (':' INT)?)*)? '}'
    TUPLE    := '(' (LABEL (',' LABEL)*)? ')'

``u^(r)`` is the divided power u^r / r!.  Labels follow the algebra: ``1``,
``t``, ``t^k`` for poly/trunc specs, the file's labels for tables.  A label
written as ``L^k`` where ``L^k`` is not itself a label is read as the
power ``(g:L)^k``, so ``xm1:1^2`` means ``(xm1:1)^2``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import AlgebraError, CoeffAlgebra, PolyAlgebra, TruncAlgebra
from .multiset import Multiset
from .pbw import ORDER, UElem, h_binomial
from .sl21 import PARITY
from .weyl_ops import H, X_pm1, X_tuple, p, p1, q1


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


class ParseWarning(UserWarning):
    pass


# AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Pos:
    line: int
    col: int


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    family: str
    label: str
    pos: Pos


@dataclass(frozen=True)
class Binom:
    which: str
    offset: int
    j: int


@dataclass(frozen=True)
class MsLit:
    entries: tuple  # ((label, mult, Pos), ...)


@dataclass(frozen=True)
class TupleLit:
    entries: tuple  # ((label, Pos), ...)


@dataclass(frozen=True)
class OpCall:
    name: str
    args: tuple
    pos: Pos


@dataclass(frozen=True)
class Power:
    base: object
    exp: int
    divided: bool
    pos: Pos


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, Product), ...)


# lexing helpers ----------------------------------------------------------

_MS_OPS = {"X1": ("x", 1), "Xm1": ("x", -1), "H1": ("h", 1), "H2": ("h", 2)}
_TUPLE_OPS = {"X2": 2, "Xm2": -2, "X3": 3, "Xm3": -3}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_LABEL = re.compile(r"[A-Za-z0-9_]+(?:\^\d+)?")
_INT = re.compile(r"\d+")
_RATIONAL = re.compile(r"\d+(?:/\d+)?")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    # position bookkeeping
    def pos(self, i: int | None = None) -> Pos:
        i = self.i if i is None else i
        line = self.src.count("\n", 0, i) + 1
        col = i - (self.src.rfind("\n", 0, i) + 1) + 1
        return Pos(line, col)

    def error(self, msg: str, i: int | None = None):
        p = self.pos(i)
        raise ParseError(msg, p.line, p.col)

    def skip_ws(self):
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.i] if self.i < len(self.src) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")

    def match(self, rx: re.Pattern):
        self.skip_ws()
        m = rx.match(self.src, self.i)
        if m:
            self.i = m.end()
        return m

    def integer(self) -> int:
        m = self.match(_INT)
        if not m:
            self.error("expected an integer")
        return int(m.group())

    # grammar
    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> Sum:
        terms = []
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        terms.append((sign, self.term()))
        while True:
            if self.eat("+"):
                terms.append((1, self.term()))
            elif self.eat("-"):
                terms.append((-1, self.term()))
            else:
                return Sum(tuple(terms))

    def _starts_factor(self) -> bool:
        ch = self.peek()
        return ch == "(" or ch.isalpha()

    def term(self) -> Product:
        factors = []
        m = self.match(_RATIONAL)
        if m:
            num, _, den = m.group().partition("/")
            if den and int(den) == 0:
                self.error("zero denominator", m.start())
            factors.append(Num(Fraction(int(num), int(den or 1))))
        elif not self._starts_factor():
            self.error(f"expected a term, found {self.peek() or 'end of input'!r}")
        while True:
            explicit = self.eat("*")
            if self._starts_factor():
                factors.append(self.factor())
            elif explicit:
                self.error("expected a factor after '*'")
            else:
                return Product(tuple(factors))

    def factor(self):
        base = self.primary()
        if self.peek() == "^":
            self.i += 1
            at = self.pos()
            if self.eat("("):
                r = self.integer()
                self.expect(")")
                return Power(base, r, True, at)
            m = self.match(_INT)
            if not m:
                self.error("expected an exponent after '^'")
            return Power(base, int(m.group()), False, at)
        return base

    def primary(self):
        self.skip_ws()
        start = self.i
        if self.eat("("):
            inner = self.expr()
            self.expect(")")
            return inner
        m = self.match(_IDENT)
        if not m:
            self.error("expected a generator or operator")
        name = m.group()
        at = self.pos(start)
        if name in ORDER and self.peek() == ":":
            self.i += 1
            lab = self.match(_LABEL)
            if not lab:
                self.error("expected a basis label after ':'")
            return Gen(name, lab.group(), self.pos(lab.start()))
        if name == "binom":
            return self.binom()
        if name in _MS_OPS:
            return OpCall(name, (self.multiset(),), at)
        if name in _TUPLE_OPS:
            return OpCall(name, (self.tuple_lit(),), at)
        if name in ("p1", "q1"):
            self.expect("(")
            a = self.multiset()
            self.expect(",")
            b = self.multiset()
            self.expect(")")
            return OpCall(name, (a, b), at)
        if name == "p":
            self.expect("(")
            a = self.multiset()
            self.expect(",")
            b = self.multiset()
            self.expect(",")
            c = self.tuple_lit()
            self.expect(")")
            return OpCall(name, (a, b, c), at)
        if name in ORDER:
            self.error(f"expected ':' and a basis label after {name!r}")
        self.error(f"unknown name {name!r}", start)

    def binom(self) -> Binom:
        self.expect("(")
        m = self.match(_IDENT)
        if not m or m.group() not in ("h1", "h2"):
            self.error("binom expects h1 or h2", m.start() if m else None)
        offset = 0
        if self.eat("-"):
            offset = self.integer()
        elif self.eat("+"):
            offset = -self.integer()
        self.expect(",")
        j = self.integer()
        self.expect(")")
        return Binom(m.group(), offset, j)

    def label(self):
        self.skip_ws()
        at = self.pos()
        m = self.match(_LABEL)
        if not m:
            self.error("expected a basis label")
        return m.group(), at

    def multiset(self) -> MsLit:
        # a parenthesised multiset is also accepted: X1({t:2})
        paren = self.eat("(")
        self.expect("{")
        entries = []
        if not self.eat("}"):
            while True:
                lab, at = self.label()
                mult = 1
                if self.eat(":"):
                    mult = self.integer()
                entries.append((lab, mult, at))
                if self.eat("}"):
                    break
                self.expect(",")
        if paren:
            self.expect(")")
        return MsLit(tuple(entries))

    def tuple_lit(self) -> TupleLit:
        self.expect("(")
        entries = []
        if not self.eat(")"):
            while True:
                entries.append(self.label())
                if self.eat(")"):
                    break
                self.expect(",")
        return TupleLit(tuple(entries))


def parse_expr(src: str):
    """Parse ``src`` into an AST; labels are resolved later by :func:`evaluate`."""
    return _Parser(src).parse()


# evaluation --------------------------------------------------------------

_POWER_LABEL = re.compile(r"t\^\d+")


def _resolve(alg: CoeffAlgebra, label: str, pos: Pos) -> int:
    try:
        return alg.index(label)
    except AlgebraError:
        raise ParseError(f"unknown basis label {label!r} for {alg.spec}", pos.line, pos.col) from None


def _gen_atom(alg: CoeffAlgebra, node: Gen) -> UElem:
    label, power = node.label, 1
    try:
        idx = alg.index(label)
    except AlgebraError:
        base, caret, exp = label.rpartition("^")
        t_shaped = isinstance(alg, (PolyAlgebra, TruncAlgebra)) and _POWER_LABEL.fullmatch(label)
        if not caret or t_shaped:
            raise ParseError(f"unknown basis label {label!r} for {alg.spec}", node.pos.line, node.pos.col) from None
        idx = _resolve(alg, base, node.pos)
        power = int(exp)
    g = UElem.generator(alg, node.family, idx)
    return _power(g, power, False, node.pos, odd=bool(PARITY[node.family]))


def _power(u: UElem, r: int, divided: bool, pos: Pos, odd: bool = False) -> UElem:
    if odd and r >= 2:
        warnings.warn(f"{pos.line}:{pos.col}: power {r} of an odd element is 0", ParseWarning, stacklevel=3)
        return UElem.zero(u.alg)
    out = u ** r
    return out.scale(Fraction(1, factorial(r))) if divided else out


def _ms(alg, lit: MsLit) -> Multiset:
    mult: dict = {}
    for label, k, pos in lit.entries:
        idx = _resolve(alg, label, pos)
        mult[idx] = mult.get(idx, 0) + k
    return Multiset(mult)


def _tuple(alg, lit: TupleLit) -> tuple:
    return tuple(_resolve(alg, label, pos) for label, pos in lit.entries)


def evaluate(node, alg: CoeffAlgebra) -> UElem:
    if isinstance(node, Sum):
        out = UElem.zero(alg)
        for sign, term in node.terms:
            out = out + evaluate(term, alg).scale(sign)
        return out
    if isinstance(node, Product):
        out = UElem.one(alg)
        for f in node.factors:
            out = out * evaluate(f, alg)
        return out
    if isinstance(node, Num):
        return UElem.scalar(alg, node.value)
    if isinstance(node, Gen):
        return _gen_atom(alg, node)
    if isinstance(node, Power):
        base = evaluate(node.base, alg)
        # only a single odd generator is forced to square to zero
        odd = isinstance(node.base, Gen) and bool(PARITY[node.base.family])
        return _power(base, node.exp, node.divided, node.pos, odd=odd)
    if isinstance(node, Binom):
        return h_binomial(alg, node.which, node.offset, node.j)
    if isinstance(node, OpCall):
        return _op(alg, node)
    raise TypeError(f"not an expression node: {node!r}")


def _op(alg, node: OpCall) -> UElem:
    name, args = node.name, node.args
    if name in _MS_OPS:
        kind, i = _MS_OPS[name]
        chi = _ms(alg, args[0])
        return X_pm1(alg, i, chi) if kind == "x" else H(alg, i, chi)
    if name in _TUPLE_OPS:
        return X_tuple(alg, _TUPLE_OPS[name], _tuple(alg, args[0]))
    if name == "p1":
        return p1(alg, _ms(alg, args[0]), _ms(alg, args[1]))
    if name == "q1":
        return q1(alg, _ms(alg, args[0]), _ms(alg, args[1]))
    return p(alg, _ms(alg, args[0]), _ms(alg, args[1]), _tuple(alg, args[2]))


def parse_uelem(src: str, alg: CoeffAlgebra) -> UElem:
    """Parse and evaluate in one step."""
    return evaluate(parse_expr(src), alg)


def parse_multiset(src: str, alg: CoeffAlgebra) -> Multiset:
    """``{t:2, t^2:1}``; the braces may be omitted."""
    text = src.strip()
    if not text.startswith("{") and not text.startswith("("):
        text = "{" + text + "}"
    ps = _Parser(text)
    lit = ps.multiset()
    if ps.peek():
        ps.error(f"unexpected {ps.peek()!r}")
    return _ms(alg, lit)


def parse_tuple(src: str, alg: CoeffAlgebra) -> tuple:
    """``(t, t^2)``; the parentheses may be omitted."""
    text = src.strip()
    if not text.startswith("("):
        text = "(" + text + ")"
    ps = _Parser(text)
    lit = ps.tuple_lit()
    if ps.peek():
        ps.error(f"unexpected {ps.peek()!r}")
    return _tuple(alg, lit)
