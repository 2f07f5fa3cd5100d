"""Divided-power operators X_{+-1}, H_i, X_{+-j} and the recursions p1, q1, p.

All multisets and tuples range over basis indices of the coefficient algebra.
p1 and q1 are memoized per (algebra, phi, chi); pass ``cache=False`` to
recompute from scratch.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import CoeffAlgebra
from .multiset import Multiset, enumerate_sub, ms_multinomial, submultisets
from .pbw import UElem, divided_power, normal_form, gen

_PM1 = {1: "x1", -1: "xm1"}
_TUPLE_FAMILY = {2: "x2", -2: "xm2", 3: "x3", -3: "xm3"}


def _divided_product(alg, family: str, chi: Multiset) -> UElem:
    out = UElem.one(alg)
    for idx, mult in chi.items():
        out = out * divided_power(alg, family, idx, mult)
    return out


def X_pm1(alg: CoeffAlgebra, sign: int, chi: Multiset) -> UElem:
    """prod over supp chi of (x_{+-1} (x) a)^(chi(a)); X(0) = 1."""
    return _divided_product(alg, _PM1[sign], chi)


def X1(alg, chi):
    return X_pm1(alg, 1, chi)


def Xm1(alg, chi):
    return X_pm1(alg, -1, chi)


def H(alg: CoeffAlgebra, i: int, phi: Multiset) -> UElem:
    """prod over supp phi of (h_i (x) b)^(phi(b)); H(0) = 1."""
    if i not in (1, 2):
        raise ValueError("H_i needs i in {1, 2}")
    return _divided_product(alg, f"h{i}", phi)


def X_tuple(alg: CoeffAlgebra, j: int, xi) -> UElem:
    """Ordered product (x_j (x) xi(1)) ... (x_j (x) xi(n)) for j in {+-2, +-3}."""
    family = _TUPLE_FAMILY[j]
    return normal_form(alg, [gen(family, b) for b in xi])


def _lie(alg, family, vec) -> UElem:
    return UElem.lie(alg, family, vec)


def _p1_step(alg, phi: Multiset, chi: Multiset, rec) -> UElem:
    if not phi and not chi:
        return UElem.one(alg)
    out = UElem.zero(alg)
    if not phi:
        for psi in submultisets(chi):
            if not psi:
                continue
            term = _lie(alg, "h1", alg.pi(psi)) * rec(alg, phi, chi - psi)
            out = out + term.scale(ms_multinomial(psi))
        return out.scale(Fraction(-1, len(chi)))
    for d in phi.support():
        rest = phi - Multiset.single(d)
        for psi in submultisets(chi):
            leg = alg.mul({d: Fraction(1)}, alg.pi(psi))
            if not leg:
                continue
            term = _lie(alg, "xm1", leg) * rec(alg, rest, chi - psi)
            out = out + term.scale(ms_multinomial(psi))
    return out.scale(Fraction(-1, len(phi)))


def _q1_step(alg, phi: Multiset, chi: Multiset, rec) -> UElem:
    if len(phi) < len(chi):
        return UElem.zero(alg)
    if not phi and not chi:
        return UElem.one(alg)
    out = UElem.zero(alg)
    if len(phi) == len(chi):
        for c in chi.support():
            for d in phi.support():
                leg = alg.mul_basis(c, d)
                if not leg:
                    continue
                out = out + _lie(alg, "h1", leg) * rec(alg, phi - Multiset.single(d), chi - Multiset.single(c))
        return out.scale(Fraction(1, len(chi)))
    for sub in enumerate_sub(phi, len(chi)):
        out = out + Xm1(alg, phi - sub) * rec(alg, sub, chi)
    return out


@lru_cache(maxsize=None)
def _p1_cached(alg, phi, chi):
    return _p1_step(alg, phi, chi, _p1_cached)


@lru_cache(maxsize=None)
def _q1_cached(alg, phi, chi):
    return _q1_step(alg, phi, chi, _q1_cached)


def _uncached(step):
    def rec(alg, phi, chi):
        return step(alg, phi, chi, rec)
    return rec


def p1(alg: CoeffAlgebra, phi: Multiset, chi: Multiset, *, cache: bool = True) -> UElem:
    """The recursion p1(phi, chi); lies in U_{|phi|}(x_{-1} (x) A) U_{|chi|}(h1 (x) A)."""
    if cache:
        return _p1_cached(alg, phi, chi)
    return _uncached(_p1_step)(alg, phi, chi)


def q1(alg: CoeffAlgebra, phi: Multiset, chi: Multiset, *, cache: bool = True) -> UElem:
    """The four-case recursion q1(phi, chi); zero when |phi| < |chi|."""
    if cache:
        return _q1_cached(alg, phi, chi)
    return _uncached(_q1_step)(alg, phi, chi)


def p(alg: CoeffAlgebra, phi1: Multiset, phi2: Multiset, xi) -> UElem:
    """p(phi1, phi2, xi) = p1(phi2, phi1) X_{-3}(xi)."""
    return p1(alg, phi2, phi1) * X_tuple(alg, -3, xi)


def clear_caches() -> None:
    _p1_cached.cache_clear()
    _q1_cached.cache_clear()
