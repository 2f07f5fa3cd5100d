"""Exact rational scalars and integer binomials.

Everything in this package is computed over Q with :class:`fractions.Fraction`;
there is no floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

Rational = Fraction

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rat_arith(lhs, rhs, kind: str) -> Fraction:
    """Apply ``kind`` (add, sub, mul, div) to two rationals.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        op = _OPS[kind]
    except KeyError:
        raise ValueError(f"unknown arithmetic kind {kind!r}") from None
    return op(Fraction(lhs), Fraction(rhs))


def int_binomial(n: int, k: int) -> int:
    """Generalized binomial n(n-1)...(n-k+1)/k! for any integer n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def fmt_rat(q) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rat(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        m = _RAT_RE.fullmatch(s)
        if m is None or int(m.group(2) or 1) == 0:
            raise ValueError(f"not a rational: {s!r}")
        return Fraction(int(m.group(1)), int(m.group(2) or 1))
    raise ValueError(f"not a rational: {s!r}")
