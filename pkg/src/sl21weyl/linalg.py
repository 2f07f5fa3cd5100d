"""Sparse Gaussian elimination over Q.

Vectors are dicts ``{coordinate: Fraction}`` with hashable, orderable keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


class NotInSpanError(ValueError):
    def __init__(self, coordinate, value):
        super().__init__(f"vector not in span: residual {value} at coordinate {coordinate!r}")
        self.coordinate = coordinate
        self.value = value


class Echelon:
    """Incrementally built echelon basis that remembers how each row was formed.

    Row i is stored together with its expression in the inserted vectors, so
    :meth:`solve` returns coordinates with respect to the original inputs.
    """

    def __init__(self):
        self._rows: dict[Hashable, tuple[dict, dict]] = {}  # pivot -> (row, combo)
        self._count = 0

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec: Mapping) -> tuple[dict, dict]:
        """(residual, combo) with vec = residual + sum(combo[i] * input_i)."""
        v = {k: Fraction(c) for k, c in vec.items() if c}
        combo: dict = {}
        while True:
            pivot = next((k for k in sorted(v) if k in self._rows), None)
            if pivot is None:
                return v, combo
            row, rcombo = self._rows[pivot]
            f = v[pivot] / row[pivot]
            for k, c in row.items():
                val = v.get(k, 0) - f * c
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
            for k, c in rcombo.items():
                val = combo.get(k, 0) + f * c
                if val:
                    combo[k] = val
                else:
                    combo.pop(k, None)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; True iff it was independent of everything before."""
        idx = self._count
        self._count += 1
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        # residual = vec - sum(combo * inputs)
        rcombo = {k: -c for k, c in combo.items()}
        rcombo[idx] = Fraction(1)
        pivot = min(residual)
        self._rows[pivot] = (residual, rcombo)
        return True

    def solve(self, target: Mapping) -> dict:
        """Coefficients c with target = sum c[i] * input_i (inputs assumed independent)."""
        residual, combo = self.reduce(target)
        if residual:
            k = min(residual)
            raise NotInSpanError(k, residual[k])
        return combo


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    return sum(1 for v in vectors if ech.add(v))


def in_span(vectors: Iterable[Mapping], target: Mapping) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    residual, _ = ech.reduce(target)
    return not residual
