"""Finitely supported multisets of basis indices and their enumerations."""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import factorial
from typing import Iterable, Iterator, Mapping


class Multiset:
    """Immutable multiplicity function on basis indices.

    ``len(chi)`` is the total multiplicity |chi|, so the zero multiset is falsy.
    ``<=`` is the pointwise partial order.
    """

    __slots__ = ("_items", "_size", "_hash")

    def __init__(self, mult: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = mult.items() if isinstance(mult, Mapping) else mult
        acc: dict[int, int] = {}
        for k, v in pairs:
            if v < 0:
                raise ValueError("multiplicities must be nonnegative")
            acc[k] = acc.get(k, 0) + v
        self._items = tuple(sorted((k, v) for k, v in acc.items() if v))
        self._size = sum(v for _, v in self._items)
        self._hash = hash(self._items)

    @classmethod
    def single(cls, idx: int, mult: int = 1) -> "Multiset":
        """``mult`` times the characteristic function of ``idx``."""
        return cls({idx: mult})

    @classmethod
    def from_list(cls, indices: Iterable[int]) -> "Multiset":
        acc: dict[int, int] = {}
        for i in indices:
            acc[i] = acc.get(i, 0) + 1
        return cls(acc)

    def items(self):
        return self._items

    def support(self) -> tuple:
        return tuple(k for k, _ in self._items)

    def elements(self) -> list[int]:
        """Indices repeated by multiplicity, ascending."""
        return [k for k, v in self._items for _ in range(v)]

    def __getitem__(self, idx: int) -> int:
        for k, v in self._items:
            if k == idx:
                return v
        return 0

    def __len__(self):
        return self._size

    @property
    def size(self) -> int:
        return self._size

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._items == other._items

    def __le__(self, other: "Multiset") -> bool:
        return all(v <= other[k] for k, v in self._items)

    def __ge__(self, other: "Multiset") -> bool:
        return other <= self

    def __add__(self, other: "Multiset") -> "Multiset":
        return Multiset(self._items + other._items)

    def __sub__(self, other: "Multiset") -> "Multiset":
        if not other <= self:
            raise ValueError(f"cannot subtract {other} from {self}: not a sub-multiset")
        d = dict(self._items)
        for k, v in other._items:
            d[k] -= v
        return Multiset(d)

    def __mul__(self, n: int) -> "Multiset":
        return Multiset({k: n * v for k, v in self._items})

    __rmul__ = __mul__

    def sort_key(self) -> tuple:
        return self._items

    def __repr__(self):
        if not self._items:
            return "Multiset()"
        return "Multiset({" + ", ".join(f"{k}: {v}" for k, v in self._items) + "})"


ZERO = Multiset()


def ms_size(chi: Multiset) -> int:
    return len(chi)


def ms_leq(psi: Multiset, chi: Multiset) -> bool:
    return psi <= chi


def ms_sub(chi: Multiset, psi: Multiset) -> Multiset:
    return chi - psi


def ms_multinomial(psi: Multiset) -> int:
    """|psi|! / prod psi(a)!"""
    out = factorial(len(psi))
    for _, v in psi.items():
        out //= factorial(v)
    return out


def submultisets(chi: Multiset) -> list[Multiset]:
    """Every psi <= chi, sorted by :meth:`Multiset.sort_key`."""
    support = chi.support()
    ranges = [range(chi[k] + 1) for k in support]
    out = [Multiset(zip(support, ms)) for ms in product(*ranges)]
    out.sort(key=Multiset.sort_key)
    return out


def enumerate_sub(chi: Multiset, k: int) -> list[Multiset]:
    """Every psi <= chi with |psi| = k, each once, deterministically ordered."""
    if k > len(chi) or k < 0:
        return []
    return [psi for psi in submultisets(chi) if len(psi) == k]


def compositions(chi: Multiset, k: int) -> list[tuple[Multiset, ...]]:
    """Ordered k-tuples of multisets summing to chi."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return [(chi,)]
    out = []
    for first in submultisets(chi):
        for rest in compositions(chi - first, k - 1):
            out.append((first,) + rest)
    out.sort(key=lambda parts: tuple(p.sort_key() for p in parts))
    return out


def multisets_of_size(window: Iterable[int], size: int) -> Iterator[Multiset]:
    """All multisets of exactly ``size`` elements drawn from ``window``."""
    for combo in combinations_with_replacement(sorted(window), size):
        yield Multiset.from_list(combo)


def multisets_up_to(window: Iterable[int], max_size: int, min_size: int = 0) -> list[Multiset]:
    window = sorted(window)
    return [chi for s in range(min_size, max_size + 1) for chi in multisets_of_size(window, s)]


def tuples_of_length(window: Iterable[int], n: int) -> list[tuple]:
    """All ordered tuples (repeats allowed) of length n over ``window``."""
    return list(product(sorted(window), repeat=n))
