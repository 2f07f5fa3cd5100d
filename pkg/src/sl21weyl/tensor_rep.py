"""The natural module V (x) A, tensor powers with the signed S_m action, TS^m,
and the module action of U(g (x) A) through the primitive coproduct.

A super-basis vector is ``(slot, basis)`` with slot in {1, 2, 3} standing for
v1, v2 = x_{-1} v1, v3 = x_{-3} v1; v3 is odd.  A :class:`Tensor` is a sparse
map from length-m tuples of such pairs to Fractions.

The natural action uses the matrix realization x1 = e12, x2 = e23, x3 = e13,
x_{-1} = e21, x_{-2} = e32, x_{-3} = e31, h1 = e11 - e22, h2 = e22 + e33.
It is kept independent of the bracket table in :mod:`sl21`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product as iproduct
from math import comb, factorial
from typing import Mapping

from .algebra import CoeffAlgebra
from .linalg import Echelon, NotInSpanError, rank
from .multiset import Multiset, multisets_of_size
from .pbw import ORDER, UElem, Generator
from .scalars import fmt_rat, parse_rat

SLOT_NAMES = {1: "v1", 2: "v2", 3: "v3"}
SLOT_PARITY = {1: 0, 2: 0, 3: 1}

# generator -> ((row, col, coeff), ...) meaning sum coeff * e_{row,col}
MATRIX = {
    "x1": ((1, 2, 1),),
    "x2": ((2, 3, 1),),
    "x3": ((1, 3, 1),),
    "xm1": ((2, 1, 1),),
    "xm2": ((3, 2, 1),),
    "xm3": ((3, 1, 1),),
    "h1": ((1, 1, 1), (2, 2, -1)),
    "h2": ((2, 2, 1), (3, 3, 1)),
}


def matrix_parity(z: str) -> int:
    """Parity read off the block structure: e_ij is odd iff exactly one index is 3."""
    (i, j, _), *_ = MATRIX[z]
    return int((i == 3) != (j == 3))


def nat_matrix(z: str) -> list:
    m = [[0] * 3 for _ in range(3)]
    for i, j, c in MATRIX[z]:
        m[i - 1][j - 1] += c
    return m


def nat_act(z: str, a: Mapping, w: tuple, alg: CoeffAlgebra) -> dict:
    """(z (x) a)(v_slot (x) b) = z v_slot (x) ab as ``{(slot, basis): coeff}``."""
    slot, b = w
    out: dict = {}
    for i, j, c in MATRIX[z]:
        if j != slot:
            continue
        for k, v in alg.mul(a, {b: Fraction(1)}).items():
            key = (i, k)
            val = out.get(key, 0) + c * v
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _gen_on_vec(alg, g: Generator, w: tuple) -> tuple:
    return tuple(nat_act(ORDER[g.rank], {g.basis: Fraction(1)}, w, alg).items())


def key_parity(key) -> int:
    return sum(SLOT_PARITY[s] for s, _ in key) & 1


class Tensor:
    """Element of T^m(V (x) A); treated as immutable."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping | None = None):
        self.m = m
        self.terms = {}
        for key, c in (terms or {}).items():
            key = tuple((int(s), int(b)) for s, b in key)
            if len(key) != m:
                raise ValueError(f"key {key} has length {len(key)}, expected {m}")
            c = Fraction(c)
            if c:
                self.terms[key] = self.terms.get(key, 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, m, terms):
        obj = cls.__new__(cls)
        obj.m = m
        obj.terms = terms
        return obj

    @classmethod
    def pure(cls, key, coeff=1) -> "Tensor":
        key = tuple(key)
        return cls._raw(len(key), {key: Fraction(coeff)} if coeff else {})

    def _check(self, other):
        if other.m != self.m:
            raise ValueError(f"degree mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.terms)
        _acc(out, other.terms, 1)
        return Tensor._raw(self.m, out)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.terms)
        _acc(out, other.terms, -1)
        return Tensor._raw(self.m, out)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Tensor":
        c = Fraction(c)
        if not c:
            return Tensor._raw(self.m, {})
        return Tensor._raw(self.m, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"coeff": fmt_rat(self.terms[k]), "key": [[SLOT_NAMES[s], b] for s, b in k]}
                for k in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Tensor":
        inv = {v: k for k, v in SLOT_NAMES.items()}
        terms = {}
        for t in data["terms"]:
            key = tuple((inv[s], b) for s, b in t["key"])
            _acc(terms, {key: parse_rat(t["coeff"])}, 1)
        return cls(data["m"], terms)

    def __repr__(self):
        if not self.terms:
            return f"Tensor(m={self.m}, 0)"
        parts = []
        for k in sorted(self.terms):
            body = "(x)".join(f"{SLOT_NAMES[s]}:{b}" for s, b in k) or "1"
            parts.append(f"{fmt_rat(self.terms[k])}*{body}")
        return f"Tensor(m={self.m}, " + " + ".join(parts) + ")"


def _acc(out: dict, src: Mapping, scale) -> None:
    for k, c in src.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)


# symmetric group action

def perm_sign_data(key, sigma) -> tuple:
    """(gamma, permuted key) for sigma^{-1}(w_1 (x) ... (x) w_m) = gamma w_{sigma(1)} (x) ... ."""
    m = len(sigma)
    par = [SLOT_PARITY[key[sigma[j]][0]] for j in range(m)]
    sign = 1
    for j in range(m):
        if not par[j]:
            continue
        for k in range(j + 1, m):
            if sigma[j] > sigma[k] and par[k]:
                sign = -sign
    return sign, tuple(key[sigma[j]] for j in range(m))


def sigma_act(sigma, t: Tensor) -> Tensor:
    """Apply the displayed signed action; ``sigma`` is a 0-based image tuple.

    Satisfies sigma_act(compose(s, u), t) == sigma_act(u, sigma_act(s, t)).
    """
    sigma = tuple(sigma)
    if len(sigma) != t.m or sorted(sigma) != list(range(t.m)):
        raise ValueError(f"not a permutation of {t.m} points: {sigma}")
    out: dict = {}
    for key, c in t.terms.items():
        sign, new = perm_sign_data(key, sigma)
        _acc(out, {new: c}, sign)
    return Tensor._raw(t.m, out)


def compose(sigma, tau) -> tuple:
    """(sigma tau)(j) = sigma(tau(j))."""
    return tuple(sigma[tau[j]] for j in range(len(tau)))


def symmetrize(t: Tensor) -> Tensor:
    """Sum over all sigma in S_m of the signed action."""
    out: dict = {}
    perms = list(permutations(range(t.m)))
    for key, c in t.terms.items():
        for sigma in perms:
            sign, new = perm_sign_data(key, sigma)
            _acc(out, {new: c}, sign)
    return Tensor._raw(t.m, out)


def is_symmetric(t: Tensor) -> bool:
    return symmetrize(t).scale(Fraction(1, factorial(t.m))) == t


# module action

def act_gen(alg: CoeffAlgebra, g: Generator, t: Tensor) -> Tensor:
    """Primitive action: sum over slots j of (-1)^{|g| (|w_1|+...+|w_{j-1}|)} g acting in slot j."""
    pg = g.parity
    out: dict = {}
    for key, c in t.terms.items():
        before = 0
        for j, w in enumerate(key):
            sign = -1 if (pg and before) else 1
            for nw, v in _gen_on_vec(alg, g, w):
                _acc(out, {key[:j] + (nw,) + key[j + 1:]: v}, sign * c)
            before ^= SLOT_PARITY[w[0]]
    return Tensor._raw(t.m, out)


def act_elem(u: UElem, t: Tensor) -> Tensor:
    """u acting on T^m through the iterated coproduct, one generator at a time."""
    alg = u.alg
    out: dict = {}
    for word, c in u.terms.items():
        cur = t
        for g in reversed(word):
            cur = act_gen(alg, g, cur)
            if not cur:
                break
        _acc(out, cur.terms, c)
    return Tensor._raw(t.m, out)


def act_tensor_of_elems(us: list, t: Tensor) -> Tensor:
    """rho(u_1 (x) ... (x) u_m) on T^m with the Koszul sign (-1)^{sum_{k<j} |u_j||z_k|}.

    Each u_i is split into parity-homogeneous parts.
    """
    if len(us) != t.m:
        raise ValueError("need one algebra element per tensor slot")
    out: dict = {}
    for key, c in t.terms.items():
        states = [((), Fraction(c))]
        for j, w in enumerate(key):
            u = us[j]
            new_states = []
            for par in (0, 1):
                part = {wd: cf for wd, cf in u.terms.items() if sum(g.parity for g in wd) & 1 == par}
                if not part:
                    continue
                img = act_elem(UElem._raw(u.alg, part), Tensor.pure((w,)))
                for (nw,), v in img.terms.items():
                    # u_j passes z_1 ... z_{j-1}
                    sign = -1 if (par and key_parity(key[:j])) else 1
                    for prefix, coeff in states:
                        new_states.append((prefix + (nw,), coeff * v * sign))
            states = new_states
        for prefix, coeff in states:
            _acc(out, {prefix: coeff}, 1)
    return Tensor._raw(t.m, out)


# distinguished vectors and the TS^m basis

def highest_weight_vector(m: int) -> Tensor:
    """(v1 (x) 1)^{(x) m}; for m = 0 the scalar 1 in T^0."""
    return Tensor.pure(((1, 0),) * m)


@dataclass(frozen=True)
class WeylIndex:
    phi1: Multiset
    phi2: Multiset
    xi: tuple

    @property
    def m(self) -> int:
        return len(self.phi1) + len(self.phi2) + len(self.xi)

    def canonical(self) -> tuple[int, "WeylIndex | None"]:
        """(sign, index) with xi sorted; (0, None) if xi repeats an entry."""
        xi = tuple(self.xi)
        if len(set(xi)) != len(xi):
            return 0, None
        inversions = sum(1 for a, b in combinations(range(len(xi)), 2) if xi[a] > xi[b])
        return (-1) ** inversions, WeylIndex(self.phi1, self.phi2, tuple(sorted(xi)))

    def is_canonical(self) -> bool:
        return all(a < b for a, b in zip(self.xi, self.xi[1:]))

    def to_json(self) -> dict:
        return {
            "phi1": {str(k): v for k, v in self.phi1.items()},
            "phi2": {str(k): v for k, v in self.phi2.items()},
            "xi": list(self.xi),
        }

    @classmethod
    def from_json(cls, data) -> "WeylIndex":
        def ms(d):
            return Multiset({int(k): int(v) for k, v in d.items()})
        return cls(ms(data["phi1"]), ms(data["phi2"]), tuple(int(x) for x in data["xi"]))


def leading_key(idx: WeylIndex) -> tuple:
    """The pure tensor whose symmetrization defines v(idx), supports in ascending order."""
    return (
        tuple((1, a) for a in idx.phi1.elements())
        + tuple((2, b) for b in idx.phi2.elements())
        + tuple((3, x) for x in idx.xi)
    )


def v_vector(idx: WeylIndex) -> Tensor:
    """v(phi1, phi2, xi): symmetrized pure tensor with 1/phi(a)! normalizations."""
    norm = 1
    for ms in (idx.phi1, idx.phi2):
        for _, mult in ms.items():
            norm *= factorial(mult)
    return symmetrize(Tensor.pure(leading_key(idx), Fraction(1, norm)))


def _window(alg: CoeffAlgebra, window) -> tuple:
    if window is None:
        return tuple(alg.basis_window())
    if isinstance(window, int):
        return tuple(alg.basis_window(window))
    return tuple(sorted(window))


def ts_basis(alg: CoeffAlgebra, m: int, window=None) -> list:
    """Canonical WeylIndex values with |phi1| + |phi2| + |xi| = m over the basis window."""
    win = _window(alg, window)
    out = []
    for n in range(m + 1):
        for xi in combinations(win, n):
            k = m - n
            for k1 in range(k, -1, -1):
                for phi1 in multisets_of_size(win, k1):
                    for phi2 in multisets_of_size(win, k - k1):
                        out.append(WeylIndex(phi1, phi2, xi))
    return out


def ts_dimension_formula(d: int, m: int) -> int:
    """sum_n C(d, n) * multichoose(2d, m - n) for a basis window of size d >= 1."""
    return sum(comb(d, n) * comb(2 * d + m - n - 1, m - n) for n in range(m + 1))


def all_pure_keys(alg: CoeffAlgebra, m: int, window=None) -> list:
    win = _window(alg, window)
    vecs = [(s, b) for s in (1, 2, 3) for b in win]
    return list(iproduct(vecs, repeat=m))


def symmetrizer_rank(alg: CoeffAlgebra, m: int, window=None) -> int:
    """Rank of sum_sigma sigma^{-1} on T^m coordinates (independent dim TS^m)."""
    return rank(symmetrize(Tensor.pure(k)).terms for k in all_pure_keys(alg, m, window))


@lru_cache(maxsize=None)
def _ts_echelon(alg, m, win):
    basis = ts_basis(alg, m, win)
    ech = Echelon()
    for idx in basis:
        if not ech.add(v_vector(idx).terms):
            raise AssertionError(f"v_vector({idx}) is dependent on earlier basis vectors")
    return basis, ech


class NotInTSError(ValueError):
    pass


def express_in_ts_basis(alg: CoeffAlgebra, t: Tensor, window=None) -> dict:
    """Exact coordinates of ``t`` over ``ts_basis``: ``{WeylIndex: Fraction}`` (nonzero only)."""
    if window is None and alg.dim is None:
        used = {b for key in t.terms for _, b in key}
        window = max(used, default=0) + 1
    win = _window(alg, window)
    if not is_symmetric(t):
        diff = symmetrize(t).scale(Fraction(1, factorial(t.m))) - t
        k = min(diff.terms)
        raise NotInTSError(f"tensor is not in TS^{t.m}: symmetrizer changes coordinate {k}")
    basis, ech = _ts_echelon(alg, t.m, win)
    try:
        combo = ech.solve(t.terms)
    except NotInSpanError as exc:
        raise NotInTSError(str(exc)) from None
    return {basis[i]: c for i, c in sorted(combo.items()) if c}
