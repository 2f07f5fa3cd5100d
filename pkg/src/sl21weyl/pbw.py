"""The enveloping algebra U(sl(2,1) (x) A) in a PBW basis.

A generator is ``Generator(rank, basis)`` where ``rank`` is the position of
its family in :data:`ORDER` and ``basis`` is a basis index of A.  Generators
compare as tuples, which is the PBW total order.  A monomial ("word") is a
non-decreasing tuple of generators in which no odd generator repeats.  A
:class:`UElem` is a sparse ``{word: Fraction}`` map over such words.

Products are normalized by local swaps

    ... u v ...  ->  (-1)^{p(u)p(v)} ... v u ...  +  ... [u, v] ...

applied at the rightmost inversion; ``g g`` for odd ``g`` becomes
``1/2 [g, g]``, which is zero for every odd generator of sl(2,1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, NamedTuple

from .algebra import CoeffAlgebra
from .scalars import fmt_rat, parse_rat
from .sl21 import BRACKET_TABLE, PARITY

ORDER = ("xm1", "h1", "xm3", "xm2", "h2", "x2", "x3", "x1")
RANK = {f: i for i, f in enumerate(ORDER)}
_RANK_PARITY = tuple(PARITY[f] for f in ORDER)
X1_RANK = RANK["x1"]


class Generator(NamedTuple):
    rank: int
    basis: int

    @property
    def family(self) -> str:
        return ORDER[self.rank]

    @property
    def parity(self) -> int:
        return _RANK_PARITY[self.rank]

    def __repr__(self):
        return f"{ORDER[self.rank]}:{self.basis}"


def gen(family: str, basis: int = 0) -> Generator:
    return Generator(RANK[family], basis)


def word_parity(word) -> int:
    return sum(_RANK_PARITY[g[0]] for g in word) & 1


@lru_cache(maxsize=None)
def _gen_bracket(alg: CoeffAlgebra, g: Generator, h: Generator) -> tuple:
    """[g, h] expanded as ((Generator, coeff), ...)."""
    ab = alg.mul_basis(g.basis, h.basis)
    if not ab:
        return ()
    out = []
    for fam, c in BRACKET_TABLE[ORDER[g.rank]][ORDER[h.rank]].items():
        r = RANK[fam]
        for k, v in ab.items():
            out.append((Generator(r, k), Fraction(c) * v))
    return tuple(out)


def _acc(out: dict, src: Mapping, scale) -> None:
    for w, c in src.items():
        v = out.get(w, 0) + scale * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)


@lru_cache(maxsize=None)
def _mul_word_gen(alg: CoeffAlgebra, word: tuple, g: Generator) -> dict:
    """Normal form of ``word * g`` for a normal ``word``.  Result is shared; do not mutate."""
    if not word:
        return {(g,): Fraction(1)}
    last = word[-1]
    if last < g or (last == g and not _RANK_PARITY[g[0]]):
        return {word + (g,): Fraction(1)}
    prefix = word[:-1]
    out: dict = {}
    if last == g:
        # odd square: g g = 1/2 [g, g]
        for h, c in _gen_bracket(alg, g, g):
            _acc(out, _mul_word_gen(alg, prefix, h), c / 2)
        return out
    sign = -1 if (_RANK_PARITY[last[0]] and _RANK_PARITY[g[0]]) else 1
    for w2, c2 in _mul_word_gen(alg, prefix, g).items():
        _acc(out, _mul_word_gen(alg, w2, last), sign * c2)
    for h, c in _gen_bracket(alg, last, g):
        _acc(out, _mul_word_gen(alg, prefix, h), c)
    return out


def _mul_terms_word(alg, terms: Mapping, word: Iterable) -> dict:
    cur = terms
    for g in word:
        nxt: dict = {}
        for w, c in cur.items():
            _acc(nxt, _mul_word_gen(alg, w, g), c)
        cur = nxt
    return dict(cur)


def is_normal_word(word) -> bool:
    for a, b in zip(word, word[1:]):
        if a > b or (a == b and _RANK_PARITY[a[0]]):
            return False
    return True


class UElem:
    """Element of U(g (x) A) as a sparse combination of normal PBW words.

    Instances are treated as immutable.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: CoeffAlgebra, terms: Mapping | None = None):
        self.alg = alg
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(Generator(*g) for g in w)
            if not is_normal_word(w):
                raise ValueError(f"word {w} is not in PBW normal form; use normal_form()")
            c = Fraction(c)
            if c:
                self.terms[w] = self.terms.get(w, 0) + c
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, alg, terms: dict) -> "UElem":
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, alg) -> "UElem":
        return cls._raw(alg, {})

    @classmethod
    def scalar(cls, alg, c=1) -> "UElem":
        c = Fraction(c)
        return cls._raw(alg, {(): c} if c else {})

    @classmethod
    def one(cls, alg) -> "UElem":
        return cls.scalar(alg, 1)

    @classmethod
    def generator(cls, alg, family: str, basis: int = 0) -> "UElem":
        alg.check_index(basis)
        return cls._raw(alg, {(gen(family, basis),): Fraction(1)})

    @classmethod
    def lie(cls, alg, family: str, a: Mapping) -> "UElem":
        """The Lie element ``family (x) a`` for a sparse algebra element ``a``."""
        r = RANK[family]
        return cls._raw(alg, {(Generator(r, k),): Fraction(c) for k, c in a.items() if c})

    # arithmetic

    def _check(self, other: "UElem"):
        if other.alg != self.alg:
            raise ValueError(f"mixed algebras: {self.alg.spec} vs {other.alg.spec}")

    def __add__(self, other):
        if not isinstance(other, UElem):
            other = UElem.scalar(self.alg, other)
        self._check(other)
        out = dict(self.terms)
        _acc(out, other.terms, 1)
        return UElem._raw(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return UElem._raw(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UElem):
            other = UElem.scalar(self.alg, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "UElem":
        c = Fraction(c)
        if not c:
            return UElem.zero(self.alg)
        return UElem._raw(self.alg, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElem):
            return u_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "UElem":
        out = UElem.one(self.alg)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UElem.scalar(self.alg, other)
        if not isinstance(other, UElem):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # inspection

    def words(self) -> list:
        return sorted(self.terms, key=_display_key)

    def coeff(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def parities(self) -> set:
        return {word_parity(w) for w in self.terms}

    def parity(self) -> int | None:
        ps = self.parities()
        return ps.pop() if len(ps) == 1 else None

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def family_degree(self, family: str) -> int:
        r = RANK[family]
        return max((sum(1 for g in w if g.rank == r) for w in self.terms), default=0)

    def to_json(self) -> list:
        return [
            {"coeff": fmt_rat(self.terms[w]), "mono": [[ORDER[r], k, e] for (r, k), e in word_factors(w)]}
            for w in self.words()
        ]

    @classmethod
    def from_json(cls, alg, data) -> "UElem":
        terms = {}
        for item in data:
            word = []
            for fam, k, e in item["mono"]:
                word.extend([gen(fam, k)] * e)
            _acc(terms, {tuple(word): parse_rat(item["coeff"])}, 1)
        return cls(alg, terms)

    def __repr__(self):
        return f"UElem({format_uelem(self)})"


def _display_key(word):
    return (-len(word), word)


def word_factors(word) -> list:
    """Collapse a word into ((rank, basis), exponent) runs."""
    out: list = []
    for g in word:
        key = (g[0], g[1])
        if out and out[-1][0] == key:
            out[-1][1] += 1
        else:
            out.append([key, 1])
    return [(k, e) for k, e in out]


def format_uelem(u: UElem) -> str:
    """Human-readable form that :func:`sl21weyl.parser.parse_uelem` reads back."""
    if not u.terms:
        return "0"
    pieces = []
    for w in u.words():
        c = u.terms[w]
        factors = []
        for (r, k), e in word_factors(w):
            atom = f"{ORDER[r]}:{u.alg.label(k)}"
            factors.append(atom if e == 1 else f"({atom})^{e}")
        body = " ".join(factors)
        mag = abs(c)
        if not body:
            text = fmt_rat(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{fmt_rat(mag)} {body}"
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + text)
    return " ".join(pieces)


def _as_generator(item) -> Generator:
    if isinstance(item, Generator):
        return item
    fam, k = item
    if isinstance(fam, str):
        return gen(fam, k)
    return Generator(fam, k)


def normal_form(alg: CoeffAlgebra, word: Iterable) -> UElem:
    """Normal form of a word whose items are generators or rational scalars."""
    scale = Fraction(1)
    gens = []
    for item in word:
        if isinstance(item, (int, Fraction)) and not isinstance(item, bool):
            scale *= item
        else:
            g = _as_generator(item)
            alg.check_index(g.basis)
            gens.append(g)
    if not scale:
        return UElem.zero(alg)
    terms = _mul_terms_word(alg, {(): scale}, gens)
    return UElem._raw(alg, terms)


def u_mul(u: UElem, v: UElem) -> UElem:
    u._check(v)
    out: dict = {}
    for w, c in v.terms.items():
        _acc(out, _mul_terms_word(u.alg, u.terms, w), c)
    return UElem._raw(u.alg, out)


def renormalize(u: UElem) -> UElem:
    """Re-run normal ordering on every stored word (identity on normal input)."""
    out: dict = {}
    for w, c in u.terms.items():
        _acc(out, _mul_terms_word(u.alg, {(): Fraction(1)}, w), c)
    return UElem._raw(u.alg, out)


def product(factors: Iterable[UElem], alg: CoeffAlgebra) -> UElem:
    out = UElem.one(alg)
    for f in factors:
        out = out * f
    return out


def divided_power(alg: CoeffAlgebra, family: str, basis: int, r: int) -> UElem:
    """(family (x) basis)^r / r!; zero for odd families when r >= 2."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    alg.check_index(basis)
    g = gen(family, basis)
    if g.parity and r >= 2:
        return UElem.zero(alg)
    return UElem._raw(alg, {(g,) * r: Fraction(1, factorial(r))})


def h_binomial(alg: CoeffAlgebra, which: str, offset: int, j: int) -> UElem:
    """binom(h - offset, j) = (h-offset)(h-offset-1)...(h-offset-j+1)/j!, h = which (x) 1."""
    if which not in ("h1", "h2"):
        raise ValueError("which must be h1 or h2")
    h = UElem.generator(alg, which, 0)
    out = UElem.one(alg)
    for i in range(j):
        out = out * (h - (offset + i))
    return out.scale(Fraction(1, factorial(j)))


def family_degree(u: UElem, family: str) -> int:
    return u.family_degree(family)


def in_left_ideal_x1(u: UElem) -> bool:
    """u in U (x1 (x) A): every word carries an x1-family factor.

    Sound because x1 is last in the order and x1 (x) A is abelian.
    """
    return all(any(g.rank == X1_RANK for g in w) for w in u.terms)


def word_in_filtered_span(word, bounds: Mapping[str, int], allowed: Iterable[str]) -> bool:
    allowed_ranks = {RANK[f] for f in allowed}
    counts: dict = {}
    for g in word:
        if g.rank not in allowed_ranks:
            return False
        counts[g.rank] = counts.get(g.rank, 0) + 1
    return all(counts.get(RANK[f], 0) <= b for f, b in bounds.items())


def in_filtered_span(u: UElem, bounds: Mapping[str, int], allowed_families: Iterable[str]) -> bool:
    """Every word uses only ``allowed_families`` and respects the per-family degree bounds.

    A negative bound makes that family's filtration piece empty.
    """
    allowed = tuple(allowed_families)
    for f, b in bounds.items():
        if b < 0:
            return not u.terms
    return all(word_in_filtered_span(w, bounds, allowed) for w in u.terms)


def split_x1(u: UElem) -> tuple[UElem, UElem]:
    """(part in U (x1 (x) A), remainder)."""
    inside = {w: c for w, c in u.terms.items() if any(g.rank == X1_RANK for g in w)}
    rest = {w: c for w, c in u.terms.items() if w not in inside}
    return UElem._raw(u.alg, inside), UElem._raw(u.alg, rest)


# Tensor squares U (x) U, used to materialize the coproduct.

def tensor2(u: UElem, v: UElem) -> dict:
    """u (x) v as ``{(word1, word2): coeff}``."""
    out: dict = {}
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            out[(w1, w2)] = c1 * c2
    return out


def coproduct(u: UElem) -> dict:
    """Delta(u) in U (x) U with Delta(g) = g (x) 1 + 1 (x) g, extended as a superalgebra map.

    (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2.
    """
    alg = u.alg
    out: dict = {}
    for word, c in u.terms.items():
        cur = {((), ()): Fraction(c)}
        for g in word:
            nxt: dict = {}
            pg = _RANK_PARITY[g[0]]
            for (a1, a2), ca in cur.items():
                sign = -1 if (pg and word_parity(a2)) else 1
                for w1, c1 in _mul_word_gen(alg, a1, g).items():
                    _acc(nxt, {(w1, a2): c1}, sign * ca)
                for w2, c2 in _mul_word_gen(alg, a2, g).items():
                    _acc(nxt, {(a1, w2): c2}, ca)
            cur = nxt
        _acc(out, cur, 1)
    return out
