"""Commutative unital coefficient algebras A with a fixed basis.

Basis elements are addressed by nonnegative integer indices; index 0 is
always the unit.  Elements are sparse maps ``{index: Fraction}``.  Three
kinds of algebra are provided:

* ``poly``      C[t] with basis t^k (unbounded, indexed lazily)
* ``trunc:N``   C[t]/(t^N) with basis 1, t, ..., t^(N-1)
* ``table:PATH`` a finite algebra given by a JSON product table
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Mapping

from .scalars import fmt_rat, parse_rat

Vec = dict  # {basis index: Fraction}, no stored zeros


class AlgebraError(ValueError):
    pass


class TableFormatError(AlgebraError):
    """Malformed table file; the message names the offending location."""


def vec_add(acc: dict, vec: Mapping, scale=1) -> dict:
    """In-place ``acc += scale * vec`` dropping zeros; returns ``acc``."""
    for k, c in vec.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


class CoeffAlgebra:
    """Common interface; subclasses implement :meth:`_mul_basis`."""

    kind = "abstract"
    dim: int | None = None

    def mul_basis(self, i: int, j: int) -> dict:
        return _cached_mul_basis(self, i, j)

    def _mul_basis(self, i: int, j: int) -> dict:
        raise NotImplementedError

    def mul(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for i, ca in a.items():
            for j, cb in b.items():
                vec_add(out, self.mul_basis(i, j), ca * cb)
        return out

    def basis_elem(self, i: int) -> dict:
        self.check_index(i)
        return {i: Fraction(1)}

    def one(self) -> dict:
        return {0: Fraction(1)}

    def is_finite(self) -> bool:
        return self.dim is not None

    def basis_window(self, d: int | None = None) -> range:
        """Indices 0..d-1; ``d`` defaults to the full basis of a finite algebra."""
        if d is None:
            if self.dim is None:
                raise AlgebraError(f"{self.spec} is infinite-dimensional; give an explicit window")
            return range(self.dim)
        if self.dim is not None and d > self.dim:
            raise AlgebraError(f"window {d} exceeds dim {self.dim} of {self.spec}")
        return range(d)

    def check_index(self, i: int) -> None:
        if i < 0 or (self.dim is not None and i >= self.dim):
            raise AlgebraError(f"basis index {i} out of range for {self.spec}")

    def label(self, i: int) -> str:
        raise NotImplementedError

    def index(self, label: str) -> int:
        raise NotImplementedError

    def pi(self, psi) -> dict:
        """Product of basis elements with the multiplicities of ``psi``; pi(0) = 1."""
        out = self.one()
        for idx, mult in psi.items():
            for _ in range(mult):
                out = self.mul(out, {idx: Fraction(1)})
                if not out:
                    return out
        return out

    def format_elem(self, a: Mapping) -> str:
        if not a:
            return "0"
        parts = []
        for i in sorted(a):
            c = a[i]
            parts.append(self.label(i) if c == 1 else f"{fmt_rat(c)}*{self.label(i)}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _cached_mul_basis(alg, i, j):
    alg.check_index(i)
    alg.check_index(j)
    return alg._mul_basis(i, j)


_T_LABEL = re.compile(r"t(?:\^(\d+))?")


def _t_label(i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return "t"
    return f"t^{i}"


def _t_index(label: str) -> int:
    if label == "1":
        return 0
    m = _T_LABEL.fullmatch(label)
    if m is None:
        raise AlgebraError(f"unknown basis label {label!r}")
    k = 1 if m.group(1) is None else int(m.group(1))
    if k < 1 or (m.group(1) is not None and k == 1):
        raise AlgebraError(f"unknown basis label {label!r}")
    return k


@dataclass(frozen=True)
class PolyAlgebra(CoeffAlgebra):
    kind = "poly"
    dim = None

    @property
    def spec(self) -> str:
        return "poly"

    def _mul_basis(self, i, j):
        return {i + j: Fraction(1)}

    def label(self, i):
        self.check_index(i)
        return _t_label(i)

    def index(self, label):
        return _t_index(label)


@dataclass(frozen=True)
class TruncAlgebra(CoeffAlgebra):
    """C[t]/(t^N)."""

    n: int
    kind = "trunc"

    def __post_init__(self):
        if self.n < 1:
            raise AlgebraError("trunc:N needs N >= 1")

    @property
    def dim(self):  # type: ignore[override]
        return self.n

    @property
    def spec(self) -> str:
        return f"trunc:{self.n}"

    def _mul_basis(self, i, j):
        return {i + j: Fraction(1)} if i + j < self.n else {}

    def label(self, i):
        self.check_index(i)
        return _t_label(i)

    def index(self, label):
        k = _t_index(label)
        if k >= self.n:
            raise AlgebraError(f"unknown basis label {label!r} for {self.spec}")
        return k


@dataclass(frozen=True)
class TableAlgebra(CoeffAlgebra):
    """Finite algebra given by structure constants.

    ``products[i][j]`` is a tuple of ``(k, Fraction)`` pairs for every ordered
    pair of basis indices.
    """

    labels: tuple
    products: tuple
    path: str = field(default="", compare=False)
    kind = "table"

    @property
    def dim(self):  # type: ignore[override]
        return len(self.labels)

    @property
    def spec(self) -> str:
        return f"table:{self.path}" if self.path else "table"

    def _mul_basis(self, i, j):
        return {k: c for k, c in self.products[i][j] if c}

    def label(self, i):
        self.check_index(i)
        return self.labels[i]

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"unknown basis label {label!r} for {self.spec}") from None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": 0,
            "products": [
                [[[k, fmt_rat(c)] for k, c in self.products[i][j]] for j in range(i, self.dim)]
                for i in range(self.dim)
            ],
        }


def _sparse_vec(raw, where: str, dim: int) -> tuple:
    if not isinstance(raw, list):
        raise TableFormatError(f"{where}: expected a list of [k, \"p/q\"] pairs")
    out: dict = {}
    for n, pair in enumerate(raw):
        loc = f"{where}[{n}]"
        if not (isinstance(pair, list) and len(pair) == 2):
            raise TableFormatError(f"{loc}: expected [k, \"p/q\"]")
        k, c = pair
        if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < dim:
            raise TableFormatError(f"{loc}: basis index {k!r} out of range 0..{dim - 1}")
        try:
            q = parse_rat(c)
        except ValueError as exc:
            raise TableFormatError(f"{loc}: {exc}") from None
        vec_add(out, {k: q})
    return tuple(sorted(out.items()))


def table_from_json(data, path: str = "") -> TableAlgebra:
    """Build a :class:`TableAlgebra` from the parsed JSON document.

    ``products[i]`` may list entries for j = i..dim-1 (upper triangle; the
    rest is filled by symmetry) or for every j = 0..dim-1.
    """
    if not isinstance(data, dict):
        raise TableFormatError("top level: expected an object")
    for key in ("dim", "labels", "products"):
        if key not in data:
            raise TableFormatError(f"top level: missing key {key!r}")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise TableFormatError("dim: expected a positive integer")
    labels = data["labels"]
    if not (isinstance(labels, list) and len(labels) == dim and all(isinstance(x, str) for x in labels)):
        raise TableFormatError(f"labels: expected {dim} strings")
    if len(set(labels)) != dim:
        raise TableFormatError("labels: duplicate label")
    if data.get("unit", 0) != 0:
        raise TableFormatError("unit: the unit must be basis index 0")
    if labels[0] != "1":
        raise TableFormatError("labels[0]: the unit label must be \"1\"")
    rows = data["products"]
    if not (isinstance(rows, list) and len(rows) == dim):
        raise TableFormatError(f"products: expected {dim} rows")
    table = [[None] * dim for _ in range(dim)]
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise TableFormatError(f"products[{i}]: expected a list")
        if len(row) == dim:
            offset = 0
        elif len(row) == dim - i:
            offset = i
        else:
            raise TableFormatError(f"products[{i}]: expected {dim - i} (upper triangle) or {dim} entries")
        for n, raw in enumerate(row):
            table[i][n + offset] = _sparse_vec(raw, f"products[{i}][{n}]", dim)
    for i, j in iproduct(range(dim), repeat=2):
        if table[i][j] is None:
            table[i][j] = table[j][i]
    return TableAlgebra(tuple(labels), tuple(tuple(r) for r in table), path=path)


def load_table(path: str) -> TableAlgebra:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise TableFormatError(f"{path}: {exc.strerror}") from None
    return table_from_json(data, path=path)


@dataclass
class TableReport:
    valid: bool
    violations: list

    def __bool__(self):
        return self.valid


def validate_table(alg: CoeffAlgebra) -> TableReport:
    """Check unit, commutativity and associativity on all basis pairs/triples."""
    if alg.dim is None:
        raise AlgebraError("validate_table needs a finite algebra")
    idx = range(alg.dim)
    violations = []
    for b in idx:
        if alg.mul_basis(0, b) != {b: 1}:
            violations.append(f"unit: 1*{alg.label(b)} != {alg.label(b)}")
    for a in idx:
        for b in idx:
            if a < b and alg.mul_basis(a, b) != alg.mul_basis(b, a):
                violations.append(f"commutativity: {alg.label(a)}*{alg.label(b)} != {alg.label(b)}*{alg.label(a)}")
    for a, b, c in iproduct(idx, repeat=3):
        left = alg.mul(alg.mul_basis(a, b), {c: 1})
        right = alg.mul({a: 1}, alg.mul_basis(b, c))
        if left != right:
            violations.append(
                f"associativity: ({alg.label(a)}*{alg.label(b)})*{alg.label(c)} "
                f"!= {alg.label(a)}*({alg.label(b)}*{alg.label(c)})"
            )
    return TableReport(not violations, violations)


def parse_algebra(spec: str) -> CoeffAlgebra:
    """``poly`` | ``trunc:N`` | ``table:PATH``; table files are validated."""
    if spec == "poly":
        return PolyAlgebra()
    if spec.startswith("trunc:"):
        try:
            n = int(spec[6:])
        except ValueError:
            raise AlgebraError(f"bad algebra spec {spec!r}") from None
        return TruncAlgebra(n)
    if spec.startswith("table:"):
        alg = load_table(spec[6:])
        report = validate_table(alg)
        if not report.valid:
            raise AlgebraError(f"{spec}: invalid table: " + "; ".join(report.violations[:5]))
        return alg
    raise AlgebraError(f"bad algebra spec {spec!r} (expected poly, trunc:N or table:PATH)")


class AlgElem:
    """An element of a specific coefficient algebra (user-facing wrapper)."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: CoeffAlgebra, coeffs: Mapping | None = None):
        self.alg = alg
        self.coeffs = {k: Fraction(c) for k, c in (coeffs or {}).items() if c}

    @classmethod
    def basis(cls, alg, i):
        return cls(alg, alg.basis_elem(i))

    def _check(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        if other.alg != self.alg:
            raise AlgebraError(f"mixed algebras: {self.alg.spec} vs {other.alg.spec}")
        return other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgElem(self.alg, self.alg.mul(self.coeffs, other.coeffs))

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgElem(self.alg, vec_add(dict(self.coeffs), other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.alg == other.alg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.alg, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"AlgElem({self.alg.format_elem(self.coeffs)})"


def alg_mul(a: AlgElem, b: AlgElem) -> AlgElem:
    return a * b
