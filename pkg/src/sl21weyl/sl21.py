"""The Lie superalgebra sl(2,1): Chevalley generators, parities, bracket table.

The table is literal data transcribed row by row (row = left argument).
``h3 = h1 + h2`` is not a separate generator.  Elements of sl(2,1) are
sparse dicts ``{generator name: Fraction}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .algebra import CoeffAlgebra

GENS = ("x1", "x2", "x3", "h1", "h2", "xm1", "xm2", "xm3")
ODD = frozenset({"x2", "x3", "xm2", "xm3"})
PARITY = {g: int(g in ODD) for g in GENS}

POSITIVE = ("x1", "x2", "x3")
NEGATIVE = ("xm1", "xm2", "xm3")
CARTAN = ("h1", "h2")

_H3 = {"h1": 1, "h2": 1}


def _row(**entries):
    return {g: entries.get(g, {}) for g in GENS}


# [row, column]; an empty dict is 0.
BRACKET_TABLE = {
    "x1": _row(x2={"x3": 1}, h1={"x1": -2}, h2={"x1": 1}, xm1={"h1": 1}, xm3={"xm2": -1}),
    "x2": _row(x1={"x3": -1}, h1={"x2": 1}, xm2={"h2": 1}, xm3={"xm1": 1}),
    "x3": _row(h1={"x3": -1}, h2={"x3": 1}, xm1={"x2": -1}, xm2={"x1": 1}, xm3=_H3),
    "h1": _row(x1={"x1": 2}, x2={"x2": -1}, x3={"x3": 1}, xm1={"xm1": -2}, xm2={"xm2": 1}, xm3={"xm3": -1}),
    "h2": _row(x1={"x1": -1}, x3={"x3": -1}, xm1={"xm1": 1}, xm3={"xm3": 1}),
    "xm1": _row(x1={"h1": -1}, x3={"x2": 1}, h1={"xm1": 2}, h2={"xm1": -1}, xm2={"xm3": -1}),
    "xm2": _row(x2={"h2": 1}, x3={"x1": 1}, h1={"xm2": -1}, xm1={"xm3": 1}),
    "xm3": _row(x1={"xm2": 1}, x2={"xm1": 1}, x3=_H3, h1={"xm3": 1}, h2={"xm3": -1}),
}


def bracket(z: str, w: str, table=None) -> dict:
    """[z, w] for two generators, read off the table."""
    table = BRACKET_TABLE if table is None else table
    return {g: Fraction(c) for g, c in table[z][w].items() if c}


def bracket_elems(u: Mapping, v: Mapping, table=None) -> dict:
    """Bilinear extension of :func:`bracket` to sparse elements."""
    out: dict = {}
    for z, a in u.items():
        for w, b in v.items():
            for g, c in bracket(z, w, table).items():
                val = out.get(g, 0) + a * b * c
                if val:
                    out[g] = val
                else:
                    out.pop(g, None)
    return out


def parity(z: str) -> int:
    return PARITY[z]


def elem_parity(u: Mapping) -> int | None:
    """Common parity of a homogeneous element (None for 0 or mixed)."""
    ps = {PARITY[g] for g in u}
    return ps.pop() if len(ps) == 1 else None


def bracket_tensor(z: str, a: Mapping, w: str, b: Mapping, alg: CoeffAlgebra) -> list:
    """[z (x) a, w (x) b] = [z, w] (x) ab as a list of (generator, AlgElem dict)."""
    ab = alg.mul(a, b)
    if not ab:
        return []
    out = []
    for g, c in bracket(z, w).items():
        out.append((g, {k: c * v for k, v in ab.items()}))
    return out


def ad_eigenvalue(h: str, x: str) -> Fraction | None:
    """The scalar c with [h, x] = c x, or None if x is not an eigenvector."""
    br = bracket(h, x)
    if not br:
        return Fraction(0)
    if set(br) == {x}:
        return br[x]
    return None
