from math import prod

import pytest
from hypothesis import given, strategies as st

from sl21weyl.multiset import (
    Multiset,
    compositions,
    enumerate_sub,
    ms_leq,
    ms_multinomial,
    ms_size,
    ms_sub,
    multisets_up_to,
    submultisets,
)
from sl21weyl.scalars import int_binomial

A, B, C = 0, 1, 2
ms = st.dictionaries(st.integers(0, 3), st.integers(0, 3), max_size=4).map(Multiset)


def test_size():
    assert ms_size(Multiset()) == 0
    assert ms_size(Multiset({A: 2, B: 1})) == 3
    assert ms_size(Multiset.single(0)) == 1


def test_leq_and_sub():
    chi = Multiset({A: 2, B: 1})
    assert ms_leq(Multiset.single(A), chi)
    assert ms_sub(chi, Multiset.single(A)) == Multiset({A: 1, B: 1})
    assert not ms_leq(Multiset.single(B), Multiset({A: 2}))
    with pytest.raises(ValueError):
        ms_sub(Multiset({A: 2}), Multiset.single(B))


def test_multinomial():
    assert ms_multinomial(Multiset()) == 1
    assert ms_multinomial(Multiset({A: 2, B: 1})) == 3
    assert ms_multinomial(Multiset({A: 1, B: 1, C: 1})) == 6


def test_enumerate_sub():
    assert enumerate_sub(Multiset({A: 2}), 1) == [Multiset.single(A)]
    assert enumerate_sub(Multiset({A: 1, B: 1}), 1) == [Multiset.single(A), Multiset.single(B)]
    assert enumerate_sub(Multiset({A: 1}), 2) == []


def test_compositions_examples():
    two_a = Multiset({A: 2})
    assert compositions(two_a, 2) == [
        (Multiset(), two_a), (Multiset.single(A), Multiset.single(A)), (two_a, Multiset())]
    assert len(compositions(Multiset({A: 1, B: 1}), 2)) == 4
    chi = Multiset({A: 1, B: 2})
    assert compositions(chi, 1) == [(chi,)]


def test_zero_multiset_is_falsy():
    assert not Multiset()
    assert Multiset({A: 0}) == Multiset()


def test_negative_multiplicity_rejected():
    with pytest.raises(ValueError):
        Multiset({A: -1})


def test_composition_count():
    for chi in multisets_up_to(range(3), 4):
        for k in range(1, 4):
            expected = prod(int_binomial(v + k - 1, k - 1) for _, v in chi.items())
            parts = compositions(chi, k)
            assert len(parts) == expected
            assert len(set(parts)) == expected
            assert all(sum(p, Multiset()) == chi for p in (list(x) for x in parts))


def test_multinomial_convolution():
    # sum over |psi| = k of m(psi) m(chi - psi) is m(chi) for every k
    for chi in multisets_up_to(range(3), 5):
        for k in range(len(chi) + 1):
            lhs = sum(ms_multinomial(psi) * ms_multinomial(chi - psi) for psi in enumerate_sub(chi, k))
            assert lhs == ms_multinomial(chi)


def test_vandermonde():
    for chi in multisets_up_to(range(3), 5):
        for k in range(len(chi) + 1):
            total = sum(prod(int_binomial(chi[a], psi[a]) for a in chi.support()) for psi in enumerate_sub(chi, k))
            assert total == int_binomial(len(chi), k)


def test_binomial_weighted_form_only_at_extremes():
    # m(chi) * binom(|chi|, k) matches the convolution only when the binomial is 1
    chi = Multiset({A: 2})
    lhs = sum(ms_multinomial(psi) * ms_multinomial(chi - psi) for psi in enumerate_sub(chi, 1))
    assert lhs != ms_multinomial(chi) * int_binomial(2, 1)


@given(ms)
def test_submultisets_complete(chi):
    subs = submultisets(chi)
    assert len(subs) == prod(v + 1 for _, v in chi.items())
    assert all(ms_leq(s, chi) for s in subs)
    assert subs == sorted(subs, key=Multiset.sort_key)


@given(ms, ms)
def test_add_sub_inverse(a, b):
    assert (a + b) - b == a
    assert ms_size(a + b) == ms_size(a) + ms_size(b)
