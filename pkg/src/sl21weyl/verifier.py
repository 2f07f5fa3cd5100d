"""Instance checks of the structural identities, the p1/q1 identities, the
tensor-model lemmas and the basis theorem.

Every check is exact.  Each public ``verify_*`` function returns one
:class:`CheckReport` (or a list of them) recording how many instances ran
and which failed.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebra import CoeffAlgebra, TruncAlgebra
from .multiset import (
    Multiset,
    compositions,
    multisets_of_size,
    multisets_up_to,
    tuples_of_length,
)
from .pbw import (
    ORDER,
    RANK,
    Generator,
    UElem,
    coproduct,
    divided_power,
    h_binomial,
    in_filtered_span,
    in_left_ideal_x1,
    normal_form,
    renormalize,
    split_x1,
    tensor2,
    word_in_filtered_span,
)
from .scalars import int_binomial
from .sl21 import BRACKET_TABLE, GENS, PARITY, bracket, bracket_elems
from .tensor_rep import (
    NotInTSError,
    Tensor,
    WeylIndex,
    act_elem,
    act_tensor_of_elems,
    all_pure_keys,
    compose,
    express_in_ts_basis,
    highest_weight_vector,
    is_symmetric,
    matrix_parity,
    nat_matrix,
    sigma_act,
    symmetrizer_rank,
    ts_basis,
    ts_dimension_formula,
    v_vector,
)
from .linalg import rank
from .weyl_ops import H, X1, X_tuple, Xm1, p, p1, q1

MAX_STORED_FAILURES = 50
_DIAG_LEN = 300


@dataclass
class CheckReport:
    check: str
    params: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, params=None, diagnostic: str = "") -> bool:
        self.instances += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_STORED_FAILURES:
                self.failures.append((dict(params or {}), str(diagnostic)[:_DIAG_LEN]))
        return ok

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "instances": self.instances,
            "failures": [{"params": _jsonable(p), "diagnostic": d} for p, d in self.failures],
            "ms": round(self.ms),
        }

    def line(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({self.failure_count} failures)"
        extra = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status:<8} {self.check:<22} [{extra}] {self.instances} instances, {self.ms:.0f} ms"


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Multiset):
        return {str(k): v for k, v in obj.items()}
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


@contextmanager
def _report(check: str, params: dict):
    rep = CheckReport(check, params)
    t0 = time.perf_counter()
    try:
        yield rep
    finally:
        rep.ms = (time.perf_counter() - t0) * 1000


def _window(alg: CoeffAlgebra, window):
    if window is None:
        return tuple(alg.basis_window())
    if isinstance(window, int):
        return tuple(alg.basis_window(window))
    return tuple(window)


def _unit(k: int) -> Multiset:
    return Multiset.single(0, k)


def _xm1_pow(alg, k: int) -> UElem:
    return divided_power(alg, "xm1", 0, k)


# ---------------------------------------------------------------------------
# identities for p1 and q1 in U(g (x) A)

DEGP_ITEMS = (1, 2, 3, 4, 5, 6, 7)


def verify_degp(
    item: int,
    alg: CoeffAlgebra,
    *,
    max_size: int = 3,
    max_r: int = 4,
    max_n: int = 2,
    max_i: int = 3,
    max_j: int = 2,
    window=None,
    as_printed: bool = False,
) -> CheckReport:
    """Check one item of the p1/q1 identity list on every instance in range.

    Items 2 and 5 are checked in corrected form by default: item 2 without
    the (-1)^{|psi|} factor, item 5 with the binomial divided instead of
    multiplied.  ``as_printed=True`` checks the uncorrected statements.
    """
    if item not in DEGP_ITEMS:
        raise ValueError(f"no item {item}")
    win = _window(alg, window)
    params = {"item": item, "algebra": alg.spec, "max_size": max_size}
    if item in (1, 4, 5):
        params["max_r"] = max_r
    if item == 7:
        params.update(max_n=max_n, max_i=max_i, max_j=max_j)
    if as_printed:
        params["as_printed"] = True
    nonzero = multisets_up_to(win, max_size, 1)
    anyms = multisets_up_to(win, max_size, 0)
    with _report(f"degp{item}", params) as rep:
        _DEGP[item](alg, rep, win, nonzero, anyms, max_r, max_n, max_i, max_j, as_printed)
    return rep


def _degp1(alg, rep, win, nonzero, anyms, max_r, *_):
    for chi in nonzero:
        for r in range(len(chi), max_r + 1):
            d = X1(alg, chi) * Xm1(alg, _unit(r)) - p1(alg, _unit(r - len(chi)), chi).scale((-1) ** r)
            rep.record(in_left_ideal_x1(d), {"chi": chi, "r": r}, d)


def _degp2(alg, rep, win, nonzero, anyms, max_r, max_n, max_i, max_j, as_printed):
    for psi in nonzero:
        for phi in anyms:
            if len(phi) < len(psi):
                continue
            sign = (-1) ** len(psi) if as_printed else 1
            d = X1(alg, psi) * Xm1(alg, phi) - q1(alg, phi, psi).scale(sign)
            _, rest = split_x1(d)
            ok = in_filtered_span(rest, {"xm1": len(phi) - len(psi), "h1": len(psi) - 1}, ("xm1", "h1"))
            rep.record(ok, {"psi": psi, "phi": phi}, rest)


def _degp3(alg, rep, win, nonzero, anyms, *_):
    for phi in anyms:
        for chi in nonzero:
            sign = (-1) ** (len(chi) + len(phi))
            d = p1(alg, phi, chi) - (Xm1(alg, phi) * H(alg, 1, chi)).scale(sign)
            ok = in_filtered_span(d, {"xm1": len(phi), "h1": len(chi) - 1}, ("xm1", "h1"))
            rep.record(ok, {"phi": phi, "chi": chi}, d)


def _degp4(alg, rep, win, nonzero, anyms, max_r, *_):
    for chi in nonzero:
        for r in range(len(chi), max_r + 1):
            lhs = q1(alg, _unit(r), chi)
            rhs = _xm1_pow(alg, r - len(chi)) * H(alg, 1, chi)
            rep.record(lhs == rhs, {"chi": chi, "r": r}, lhs - rhs)


def _in_degp5_span(word, lo, hi, total_xm1, h_bound) -> bool:
    """word lies in sum_{s=lo}^{hi} (x_{-1})^{(s)} U_{total_xm1-s}(x_{-1} (x) A) U_{h_bound}(h1 (x) A)."""
    unit = Generator(RANK["xm1"], 0)
    e1 = sum(1 for g in word if g == unit)
    for s in range(lo, hi + 1):
        if e1 >= s and word_in_filtered_span(word, {"xm1": total_xm1, "h1": h_bound}, ("xm1", "h1")):
            return True
    return False


def _degp5(alg, rep, win, nonzero, anyms, max_r, max_n, max_i, max_j, as_printed):
    for phi in anyms:
        for chi in nonzero:
            for r in range(len(chi), max_r + 1):
                n = r - len(chi)
                b = int_binomial(phi[0] + n, phi[0])
                lead = _xm1_pow(alg, n) * Xm1(alg, phi) * H(alg, 1, chi)
                coeff = b if as_printed else Fraction(1, b)
                d = q1(alg, phi + _unit(r), chi) - lead.scale(coeff)
                lo, hi = n + 1, min(r, n + len(phi) - phi[0])
                # an empty range is the zero space
                ok = all(_in_degp5_span(w, lo, hi, len(phi) + n, len(chi)) for w in d.terms)
                rep.record(ok, {"phi": phi, "chi": chi, "r": r}, d)


def _degp6(alg, rep, win, nonzero, anyms, *_):
    for phi in anyms:
        for chi in anyms:
            for k in range(chi[0] + 1):
                lhs = p1(alg, phi, chi)
                scale = Fraction((-1) ** k, int_binomial(chi[0], k))
                hb = h_binomial(alg, "h1", len(phi) + len(chi) - k, k)
                rhs = (p1(alg, phi, chi - _unit(k)) * hb).scale(scale)
                rep.record(lhs == rhs, {"phi": phi, "chi": chi, "k": k}, lhs - rhs)


def _degp7(alg, rep, win, nonzero, anyms, max_r, max_n, max_i, max_j, as_printed):
    for n in range(max_n + 1):
        for xi in tuples_of_length(win, n):
            x = X_tuple(alg, -3, xi)
            for i in range(max_i + 1):
                for j in range(max_j + 1):
                    lhs = h_binomial(alg, "h1", i, j) * x
                    rhs = x * h_binomial(alg, "h1", i + n, j)
                    rep.record(lhs == rhs, {"xi": xi, "i": i, "j": j}, lhs - rhs)


_DEGP = {1: _degp1, 2: _degp2, 3: _degp3, 4: _degp4, 5: _degp5, 6: _degp6, 7: _degp7}


# ---------------------------------------------------------------------------
# coproduct of p1

def _composition_pairs(phi, chi, k):
    for theta in compositions(phi, k):
        for psi in compositions(chi, k):
            yield theta, psi


def check_deltap(alg: CoeffAlgebra, phi: Multiset, chi: Multiset, k: int, rep: CheckReport, window=None) -> None:
    params = {"phi": phi, "chi": chi, "k": k}
    u = p1(alg, phi, chi)
    pairs = list(_composition_pairs(phi, chi, k))
    if k == 2:
        lhs = coproduct(u)
        rhs: dict = {}
        for theta, psi in pairs:
            for key, c in tensor2(p1(alg, theta[0], psi[0]), p1(alg, theta[1], psi[1])).items():
                v = rhs.get(key, 0) + c
                if v:
                    rhs[key] = v
                else:
                    rhs.pop(key, None)
        rep.record(lhs == rhs, dict(params, mode="materialized"), "Delta(p1) differs from the composition sum")
    bad = None
    for key in all_pure_keys(alg, k, window):
        t = Tensor.pure(key)
        lhs_t = act_elem(u, t)
        rhs_t = Tensor(k)
        for theta, psi in pairs:
            rhs_t = rhs_t + act_tensor_of_elems([p1(alg, a, b) for a, b in zip(theta, psi)], t)
        if lhs_t != rhs_t:
            bad = key
            break
    rep.record(bad is None, dict(params, mode="action"), f"first differing basis tensor {bad}")


def verify_deltap(alg: CoeffAlgebra, phi: Multiset, chi: Multiset, k: int, window=None) -> CheckReport:
    """Delta^{k-1}(p1(phi, chi)) equals the sum over compositions of tensor products of p1's.

    k = 2 compares in U (x) U directly; every k also compares the actions on
    each basis tensor of T^k(V (x) A).
    """
    with _report("deltap", {"algebra": alg.spec, "phi": str(phi), "chi": str(chi), "k": k}) as rep:
        check_deltap(alg, phi, chi, k, rep, window)
    return rep


def verify_deltap_range(alg: CoeffAlgebra, max_total: int = 3, max_k: int = 3, window=None) -> CheckReport:
    win = _window(alg, window)
    with _report("deltap", {"algebra": alg.spec, "max_total": max_total, "max_k": max_k}) as rep:
        for phi in multisets_up_to(win, max_total):
            for chi in multisets_up_to(win, max_total - len(phi)):
                for k in range(1, max_k + 1):
                    check_deltap(alg, phi, chi, k, rep, window)
    return rep


# ---------------------------------------------------------------------------
# p1 on v1

def check_p1v(alg, phi, chi, rep, window=None) -> None:
    win = _window(alg, window)
    k = len(phi) + len(chi)
    lhs = act_elem(p1(alg, phi, chi), highest_weight_vector(k))
    rhs = v_vector(WeylIndex(chi, phi, ())).scale((-1) ** k)
    rep.record(lhs == rhs, {"lemma": "highest weight", "phi": phi, "chi": chi}, lhs - rhs)
    if k > 1:
        u = p1(alg, phi, chi)
        for a in win:
            img = act_elem(u, Tensor.pure(((1, a),)))
            rep.record(not img, {"lemma": "single factor", "phi": phi, "chi": chi, "a": a}, img)


def verify_p1v(alg: CoeffAlgebra, phi: Multiset, chi: Multiset, window=None) -> CheckReport:
    """p1(phi, chi) v1^k = (-1)^k v(chi, phi, 0), and p1(phi, chi)(v1 (x) a) = 0 when k > 1."""
    with _report("p1v", {"algebra": alg.spec, "phi": str(phi), "chi": str(chi)}) as rep:
        check_p1v(alg, phi, chi, rep, window)
    return rep


def verify_p1v_range(alg: CoeffAlgebra, max_total: int = 3, window=None) -> CheckReport:
    win = _window(alg, window)
    with _report("p1v", {"algebra": alg.spec, "max_total": max_total}) as rep:
        for phi in multisets_up_to(win, max_total):
            for chi in multisets_up_to(win, max_total - len(phi)):
                check_p1v(alg, phi, chi, rep, window)
    return rep


# ---------------------------------------------------------------------------
# basis theorem

def verify_pv_and_basis(alg: CoeffAlgebra, m: int, window=None) -> CheckReport:
    """p(idx) v = (-1)^{|phi1|+|phi2|} v(idx) for every index, and the images have full rank.

    The rank is compared against the index count, the rank of the signed
    symmetrizer on T^m and the closed-form dimension.
    """
    win = _window(alg, window)
    with _report("pv_basis", {"algebra": alg.spec, "m": m}) as rep:
        basis = ts_basis(alg, m, win)
        v = highest_weight_vector(m)
        images = []
        for idx in basis:
            img = act_elem(p(alg, idx.phi1, idx.phi2, idx.xi), v)
            images.append(img.terms)
            expected = v_vector(idx).scale((-1) ** (len(idx.phi1) + len(idx.phi2)))
            rep.record(img == expected, {"index": idx.to_json()}, img - expected)
        r = rank(images)
        sym = symmetrizer_rank(alg, m, win)
        formula = ts_dimension_formula(len(win), m)
        rep.record(r == len(basis), {"rank": r, "indices": len(basis)}, "p(idx) v not independent")
        rep.record(sym == len(basis), {"symmetrizer_rank": sym, "indices": len(basis)}, "index count != dim TS^m")
        rep.record(formula == len(basis), {"formula": formula, "indices": len(basis)}, "closed form disagrees")
        rep.params["dim"] = len(basis)
    return rep


# ---------------------------------------------------------------------------
# spanning lemmas, checked in TS^m through the highest weight vector

def _member(alg, rep, t: Tensor, params, win) -> None:
    try:
        express_in_ts_basis(alg, t, win)
    except NotInTSError as exc:
        rep.record(False, params, exc)
        return
    rep.record(True, params)


def verify_spanning_lemmas(alg: CoeffAlgebra, m: int, window=None) -> CheckReport:
    """Instances of the lemmas showing that the p(idx) w span the quotient module.

    Statements about the quotient are read in TS^m via w -> v, which is
    legitimate once the basis check at the same (m, algebra) has passed; it
    is run first and recorded as part of this report.
    """
    win = _window(alg, window)
    with _report("spanning", {"algebra": alg.spec, "m": m}) as rep:
        base = verify_pv_and_basis(alg, m, win)
        rep.record(base.passed, {"prerequisite": "pv_basis"}, "basis check failed")
        if not base.passed:
            return rep
        v = highest_weight_vector(m)
        act = lambda u: act_elem(u, v)  # noqa: E731
        ms_by_size = {s: list(multisets_of_size(win, s)) for s in range(m + 2)}

        # fewer than m factors: proportional to an index of size m
        for k in range(m):
            for n in range(k + 1):
                for xi in tuples_of_length(win, n):
                    for k1 in range(k - n + 1):
                        for phi1 in ms_by_size[k1]:
                            for phi2 in ms_by_size[k - n - k1]:
                                lhs = act(p(alg, phi1, phi2, xi))
                                c = (-1) ** (m - k) * int_binomial(phi1[0] + m - k, m - k)
                                rhs = act(p(alg, phi1 + _unit(m - k), phi2, xi)).scale(c)
                                rep.record(lhs == rhs, {"lemma": "proportional", "phi1": phi1, "phi2": phi2, "xi": xi},
                                           lhs - rhs)

        # degree-filtered pieces of total size <= m
        for n in range(m + 1):
            for xi in tuples_of_length(win, n):
                x3 = X_tuple(alg, -3, xi)
                for k1 in range(m - n + 1):
                    for k2 in range(m - n - k1 + 1):
                        for psi1 in ms_by_size[k1]:
                            for psi2 in ms_by_size[k2]:
                                params = {"lemma": "filtered", "psi1": psi1, "psi2": psi2, "xi": xi}
                                u = Xm1(alg, psi1) * H(alg, 1, psi2) * x3
                                _member(alg, rep, act(u), params, win)
                                # p(psi2, psi1, xi) minus its leading term has lower total degree
                                k = k1 + k2 + n
                                d = p(alg, psi2, psi1, xi) - u.scale((-1) ** (k1 + k2))
                                ok = in_filtered_span(d, {"xm1": k1, "h1": k2, "xm3": n}, ("xm1", "h1", "xm3")) \
                                    and all(len(w) < k for w in d.terms)
                                rep.record(ok, dict(params, step="leading term"), d)

        # q1(phi, chi) X_{-3}(xi) w with |phi| + n = m + 1
        for n in range(m + 2):
            for xi in tuples_of_length(win, n):
                x3 = X_tuple(alg, -3, xi)
                for phi in ms_by_size[m + 1 - n]:
                    low = act(Xm1(alg, phi) * x3)
                    rep.record(not low, {"lemma": "q1 span", "phi": phi, "xi": xi, "step": "too many lowerings"}, low)
                    for a in win:
                        t = act(UElem.generator(alg, "x1", a) * x3)
                        rep.record(not t, {"lemma": "q1 span", "xi": xi, "a": a, "step": "x1 ideal"}, t)
                    for s in range(m + 2):
                        for chi in ms_by_size[s]:
                            params = {"lemma": "q1 span", "phi": phi, "chi": chi, "xi": xi}
                            _member(alg, rep, act(q1(alg, phi, chi) * x3), params, win)
                            z = act(X1(alg, chi) * Xm1(alg, phi) * x3)
                            rep.record(not z, dict(params, step="weight"), z)

        # (x_{-1})^{(m+1-j-l-n)} X_{-1}(phi) H1(chi) X_{-3}(xi) w
        for n in range(m + 2):
            for xi in tuples_of_length(win, n):
                x3 = X_tuple(alg, -3, xi)
                for j in range(m + 2 - n):
                    for l in range(m + 2 - n - j):
                        for phi in ms_by_size[j]:
                            for chi in ms_by_size[l]:
                                params = {"lemma": "divided power", "phi": phi, "chi": chi, "xi": xi}
                                u = _xm1_pow(alg, m + 1 - j - l - n) * Xm1(alg, phi) * H(alg, 1, chi) * x3
                                _member(alg, rep, act(u), params, win)
                                if j == 0:
                                    rhs = act(q1(alg, _unit(m + 1 - n), chi) * x3)
                                    rep.record(act(u) == rhs, dict(params, step="j=0 via q1"), act(u) - rhs)

        # U_k(h1 (x) A) Lambda_n(x_{-3} (x) A) w with k + n > m
        for n in range(m + 2):
            for xi in tuples_of_length(win, n):
                x3 = X_tuple(alg, -3, xi)
                for k in range(max(0, m + 1 - n), m + 2 - n):
                    for chi in ms_by_size[k]:
                        params = {"lemma": "h1 only", "chi": chi, "xi": xi}
                        _member(alg, rep, act(H(alg, 1, chi) * x3), params, win)
                        z = act(X1(alg, chi) * Xm1(alg, _unit(k)) * x3)
                        rep.record(not z, dict(params, step="weight"), z)
                        if k:
                            z = act(p1(alg, Multiset(), chi) * x3)
                            rep.record(not z, dict(params, step="p1 kills"), z)
    return rep


# ---------------------------------------------------------------------------
# defining relations of the quotient module on v = v1^{(x) m}

def verify_relations(alg: CoeffAlgebra, m: int, window=None) -> CheckReport:
    win = _window(alg, window)
    with _report("relations", {"algebra": alg.spec, "m": m}) as rep:
        v = highest_weight_vector(m)
        for fam in ("x1", "x2", "x3"):
            for a in win:
                t = act_elem(UElem.generator(alg, fam, a), v)
                rep.record(not t, {"relation": "n+", "gen": fam, "a": a}, t)
        for fam, weight in (("h1", m), ("h2", 0)):
            t = act_elem(UElem.generator(alg, fam, 0), v)
            rep.record(t == v.scale(weight), {"relation": "weight", "gen": fam}, t)
        x = UElem.generator(alg, "xm1", 0)
        t = act_elem(x ** (m + 1), v)
        rep.record(not t, {"relation": "x_{-1}^{m+1}"}, t)
        t = act_elem(x ** m, v)
        rep.record(bool(t), {"relation": "x_{-1}^m nonzero"}, "x_{-1}^m v vanished")
        for a in win:
            t = act_elem(UElem.generator(alg, "xm2", a), v)
            rep.record(not t, {"relation": "x_{-2}", "a": a}, t)
    return rep


# ---------------------------------------------------------------------------
# structure of sl(2,1) and of the matrix realization

def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _mat_lin(elem: dict):
    out = [[0] * 3 for _ in range(3)]
    for z, c in elem.items():
        mz = nat_matrix(z)
        for i in range(3):
            for j in range(3):
                out[i][j] += c * mz[i][j]
    return out


def verify_structural(table=None) -> list:
    """Super antisymmetry, super Jacobi, matrix cross-check, sl2 triple and ad h1 weights."""
    table = BRACKET_TABLE if table is None else table
    tag = "builtin" if table is BRACKET_TABLE else "custom"
    reports = []
    unit = lambda z: {z: Fraction(1)}  # noqa: E731

    with _report("sl21.antisymmetry", {"table": tag}) as rep:
        for z, w in iproduct(GENS, repeat=2):
            lhs = bracket(z, w, table)
            rhs = {g: -((-1) ** (PARITY[z] * PARITY[w])) * c for g, c in bracket(w, z, table).items()}
            rep.record(lhs == rhs, {"pair": (z, w)}, f"{lhs} vs {rhs}")
    reports.append(rep)

    with _report("sl21.jacobi", {"table": tag}) as rep:
        for x, y, z in iproduct(GENS, repeat=3):
            total: dict = {}
            for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                s = (-1) ** (PARITY[a] * PARITY[c])
                for g, val in bracket_elems(unit(a), bracket(b, c, table), table).items():
                    total[g] = total.get(g, 0) + s * val
            total = {g: c for g, c in total.items() if c}
            rep.record(not total, {"triple": (x, y, z)}, total)
    reports.append(rep)

    with _report("sl21.matrix", {"table": tag}) as rep:
        for z in GENS:
            rep.record(matrix_parity(z) == PARITY[z], {"parity": z}, "parity disagrees with block structure")
        for z, w in iproduct(GENS, repeat=2):
            mz, mw = nat_matrix(z), nat_matrix(w)
            s = (-1) ** (PARITY[z] * PARITY[w])
            zw, wz = _mat_mul(mz, mw), _mat_mul(mw, mz)
            comm = [[zw[i][j] - s * wz[i][j] for j in range(3)] for i in range(3)]
            rep.record(comm == _mat_lin(bracket(z, w, table)), {"pair": (z, w)}, comm)
    reports.append(rep)

    with _report("sl21.sl2_weights", {"table": tag}) as rep:
        expected = {
            ("h1", "x1"): {"x1": 2}, ("h1", "xm1"): {"xm1": -2}, ("x1", "xm1"): {"h1": 1},
            ("h1", "x2"): {"x2": -1}, ("h1", "xm2"): {"xm2": 1},
            ("h1", "x3"): {"x3": 1}, ("h1", "xm3"): {"xm3": -1},
        }
        for (z, w), exp in expected.items():
            got = bracket(z, w, table)
            rep.record(got == exp, {"pair": (z, w)}, got)
    reports.append(rep)
    return reports


# ---------------------------------------------------------------------------
# seeded fuzzing of U(g (x) A) and of the tensor action

def random_word(rng: random.Random, win, max_len: int = 3) -> list:
    n = rng.randint(0, max_len)
    return [(rng.choice(ORDER), rng.choice(win)) for _ in range(n)]


def random_uelem(alg, rng: random.Random, win, max_len: int = 3, terms: int = 2) -> UElem:
    out = UElem.zero(alg)
    for _ in range(terms):
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        out = out + normal_form(alg, [c] + random_word(rng, win, max_len))
    return out


def verify_pbw(alg: CoeffAlgebra, samples: int = 200, seed: int = 0, window=None) -> CheckReport:
    """Associativity, idempotent renormalization, parity and filtration on seeded random words."""
    win = _window(alg, window)
    rng = random.Random(seed)
    with _report("pbw.fuzz", {"algebra": alg.spec, "samples": samples, "seed": seed}) as rep:
        for i in range(samples):
            words = [random_word(rng, win) for _ in range(3)]
            u, v, w = (normal_form(alg, wd) for wd in words)
            lhs, rhs = (u * v) * w, u * (v * w)
            rep.record(lhs == rhs, {"sample": i, "words": words, "property": "associativity"}, lhs - rhs)
            rep.record(renormalize(lhs) == lhs, {"sample": i, "property": "idempotent"}, lhs)
            uv = u * v
            pu, pv = u.parity(), v.parity()
            if pu is not None and pv is not None and uv:
                rep.record(uv.parity() == (pu + pv) % 2, {"sample": i, "property": "parity"}, uv)
            rep.record(uv.degree() <= u.degree() + v.degree(), {"sample": i, "property": "filtration"}, uv)
    return rep


def verify_tensor_structure(alg: CoeffAlgebra, max_m: int = 3, samples: int = 100, seed: int = 0,
                            window=None) -> CheckReport:
    """Group action law, TS^m invariance, module homomorphism and weights of the basis vectors."""
    from itertools import permutations

    win = _window(alg, window)
    rng = random.Random(seed)
    with _report("tensor.structure", {"algebra": alg.spec, "max_m": max_m, "seed": seed}) as rep:
        keys3 = all_pure_keys(alg, 3, win)
        perms = list(permutations(range(3)))
        for _ in range(10):
            t = Tensor(3, {rng.choice(keys3): rng.randint(1, 5) for _ in range(3)})
            for s, u in iproduct(perms, repeat=2):
                lhs = sigma_act(compose(s, u), t)
                rhs = sigma_act(u, sigma_act(s, t))
                rep.record(lhs == rhs, {"sigma": s, "tau": u, "property": "group action"}, lhs - rhs)
        for m in range(1, max_m + 1):
            basis = ts_basis(alg, m, win)
            for idx in basis:
                vv = v_vector(idx)
                h1 = act_elem(UElem.generator(alg, "h1", 0), vv)
                h2 = act_elem(UElem.generator(alg, "h2", 0), vv)
                rep.record(h1 == vv.scale(len(idx.phi1) - len(idx.phi2)), {"index": idx.to_json(), "property": "h1"}, h1)
                rep.record(h2 == vv.scale(len(idx.phi2) + len(idx.xi)), {"index": idx.to_json(), "property": "h2"}, h2)
            for i in range(samples // max_m):
                u = random_uelem(alg, rng, win, max_len=2)
                idx = rng.choice(basis)
                img = act_elem(u, v_vector(idx))
                rep.record(is_symmetric(img), {"m": m, "sample": i, "property": "TS invariance"}, img)
                u2 = random_uelem(alg, rng, win, max_len=2)
                t = Tensor(m, {rng.choice(all_pure_keys(alg, m, win)): 1})
                lhs = act_elem(u * u2, t)
                rhs = act_elem(u, act_elem(u2, t))
                rep.record(lhs == rhs, {"m": m, "sample": i, "property": "homomorphism"}, lhs - rhs)
    return rep


# ---------------------------------------------------------------------------

PROFILES = {
    "quick": dict(degp_size=2, degp_r=3, deltap_total=2, deltap_k=3, p1v_total=3, basis_m=3, span_m=2,
                  rel_m=3, fuzz=200),
    "full": dict(degp_size=3, degp_r=4, deltap_total=3, deltap_k=3, p1v_total=3, basis_m=3, span_m=3,
                 rel_m=4, fuzz=200),
}


def verify_all(profile: str = "quick", alg: CoeffAlgebra | None = None, seed: int = 0, table=None) -> list:
    """Run every check; ``table`` substitutes the bracket table in the structural checks."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    cfg = PROFILES[profile]
    alg = TruncAlgebra(2) if alg is None else alg
    reports = verify_structural(table)
    reports.append(verify_pbw(alg, cfg["fuzz"], seed))
    reports.append(verify_tensor_structure(alg, max_m=2 if profile == "quick" else 3, seed=seed))
    for item in DEGP_ITEMS:
        reports.append(verify_degp(item, alg, max_size=cfg["degp_size"], max_r=cfg["degp_r"]))
    reports.append(verify_deltap_range(alg, cfg["deltap_total"], cfg["deltap_k"]))
    reports.append(verify_p1v_range(alg, cfg["p1v_total"]))
    for m in range(cfg["basis_m"] + 1):
        reports.append(verify_pv_and_basis(alg, m))
    for m in range(1, cfg["span_m"] + 1):
        reports.append(verify_spanning_lemmas(alg, m))
    for m in range(cfg["rel_m"] + 1):
        reports.append(verify_relations(alg, m))
    return reports
