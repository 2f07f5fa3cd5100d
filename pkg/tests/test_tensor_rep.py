import random
from fractions import Fraction
from itertools import permutations, product

import pytest

from sl21weyl.algebra import TruncAlgebra
from sl21weyl.multiset import Multiset
from sl21weyl.pbw import UElem, normal_form
from sl21weyl.sl21 import GENS, PARITY, bracket
from sl21weyl.tensor_rep import (
    MATRIX,
    NotInTSError,
    Tensor,
    WeylIndex,
    act_elem,
    act_gen,
    all_pure_keys,
    compose,
    express_in_ts_basis,
    highest_weight_vector,
    is_symmetric,
    matrix_parity,
    nat_act,
    nat_matrix,
    sigma_act,
    symmetrize,
    symmetrizer_rank,
    ts_basis,
    ts_dimension_formula,
    v_vector,
)
from sl21weyl.verifier import random_uelem

ZERO = Multiset()
V1, V2, V3 = 1, 2, 3
A, B = 0, 1


def pure(*vecs):
    return Tensor.pure(tuple(vecs))


def test_nat_act_examples(poly):
    assert nat_act("xm1", {0: 1}, (V1, B), poly) == {(V2, B): 1}
    assert nat_act("xm1", {0: 1}, (V3, B), poly) == {}
    assert nat_act("h1", {0: 1}, (V3, B), poly) == {}
    assert nat_act("h1", {0: 1}, (V2, B), poly) == {(V2, B): -1}
    assert nat_act("xm3", {1: 2}, (V1, 1), poly) == {(V3, 2): 2}


def test_matrix_realization_matches_table():
    for z, w in product(GENS, repeat=2):
        mz, mw = nat_matrix(z), nat_matrix(w)
        s = (-1) ** (PARITY[z] * PARITY[w])
        comm = [[sum(mz[i][k] * mw[k][j] - s * mw[i][k] * mz[k][j] for k in range(3)) for j in range(3)]
                for i in range(3)]
        expected = [[0] * 3 for _ in range(3)]
        for gname, c in bracket(z, w).items():
            for i, j, v in MATRIX[gname]:
                expected[i - 1][j - 1] += c * v
        assert comm == expected, (z, w)
    assert all(matrix_parity(z) == PARITY[z] for z in GENS)


def test_sigma_act_examples():
    swap = (1, 0)
    assert sigma_act(swap, pure((V3, A), (V3, B))) == -pure((V3, B), (V3, A))
    assert sigma_act(swap, pure((V1, A), (V3, B))) == pure((V3, B), (V1, A))
    t = pure((V1, A), (V2, B)) + pure((V3, A), (V3, B))
    assert sigma_act((0, 1), t) == t
    with pytest.raises(ValueError):
        sigma_act((0, 1, 2), t)


def test_group_action_law():
    rng = random.Random(0)
    keys = all_pure_keys(TruncAlgebra(2), 3)
    perms = list(permutations(range(3)))
    for _ in range(20):
        t = Tensor(3, {rng.choice(keys): rng.randint(-3, 3) for _ in range(3)})
        for s, u in product(perms, repeat=2):
            assert sigma_act(compose(s, u), t) == sigma_act(u, sigma_act(s, t))


def test_symmetrize_examples():
    t = pure((V2, B))
    assert symmetrize(t) == t
    assert symmetrize(pure((V3, A), (V3, A))) == Tensor(2)
    assert symmetrize(pure((V1, A), (V2, B))) == pure((V1, A), (V2, B)) + pure((V2, B), (V1, A))


def test_act_examples(poly):
    v = highest_weight_vector(2)
    assert act_elem(UElem.generator(poly, "xm3"), v) == pure((V3, 0), (V1, 0)) + pure((V1, 0), (V3, 0))
    assert act_elem(UElem.generator(poly, "x1", 1), highest_weight_vector(3)) == Tensor(3)


def test_act_gen_koszul_sign(poly):
    t = pure((V3, 0), (V1, 0))
    # the odd x_{-3} passes an odd v3 before acting in slot 2
    assert act_gen(poly, UElem.generator(poly, "xm3").words()[0][0], t) == -pure((V3, 0), (V3, 0))


def test_weights(t2):
    for m in range(4):
        for idx in ts_basis(t2, m):
            vv = v_vector(idx)
            h1 = act_elem(UElem.generator(t2, "h1"), vv)
            h2 = act_elem(UElem.generator(t2, "h2"), vv)
            assert h1 == vv.scale(len(idx.phi1) - len(idx.phi2))
            assert h2 == vv.scale(len(idx.phi2) + len(idx.xi))


def test_v_vector_examples():
    a, b = 0, 1
    assert v_vector(WeylIndex(Multiset.single(a), ZERO, ())) == pure((V1, a))
    assert v_vector(WeylIndex(ZERO, ZERO, (a,))) == pure((V3, a))
    assert v_vector(WeylIndex(Multiset.single(a), Multiset.single(b), ())) == \
        pure((V1, a), (V2, b)) + pure((V2, b), (V1, a))
    # divided-power normalization: two equal v1 legs sum to a single pure tensor
    assert v_vector(WeylIndex(Multiset.single(a, 2), ZERO, ())) == pure((V1, a), (V1, a))


def test_weyl_index_canonical():
    idx = WeylIndex(ZERO, ZERO, (2, 0, 1))
    assert idx.canonical() == (1, WeylIndex(ZERO, ZERO, (0, 1, 2)))
    assert WeylIndex(ZERO, ZERO, (1, 0)).canonical()[0] == -1
    assert WeylIndex(ZERO, ZERO, (1, 1)).canonical() == (0, None)
    idx = WeylIndex(Multiset({0: 2}), Multiset.single(1), (0,))
    assert WeylIndex.from_json(idx.to_json()) == idx
    assert idx.m == 4


def test_ts_basis_counts():
    assert len(ts_basis(TruncAlgebra(1), 1)) == 3
    assert len(ts_basis(TruncAlgebra(1), 2)) == 5
    assert len(ts_basis(TruncAlgebra(2), 2)) == 19
    assert ts_basis(TruncAlgebra(2), 0) == [WeylIndex(ZERO, ZERO, ())]


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_dimension_oracles_agree(n, m):
    alg = TruncAlgebra(n)
    assert len(ts_basis(alg, m)) == symmetrizer_rank(alg, m) == ts_dimension_formula(n, m)


def test_express_examples(t2):
    basis = ts_basis(t2, 2)
    for idx in basis:
        assert express_in_ts_basis(t2, v_vector(idx)) == {idx: 1}
    assert express_in_ts_basis(t2, Tensor(2)) == {}
    with pytest.raises(NotInTSError):
        express_in_ts_basis(t2, pure((V1, 0), (V2, 1)))


def test_express_poly_infers_window(poly):
    t = act_elem(UElem.generator(poly, "xm1", 3), highest_weight_vector(2))
    coords = express_in_ts_basis(poly, t)
    assert coords == {WeylIndex(Multiset.single(0), Multiset.single(3), ()): 1}


def test_json_round_trip():
    t = pure((V1, 0), (V3, 2)).scale(Fraction(-2, 3)) + pure((V2, 1), (V1, 0))
    data = t.to_json()
    assert Tensor.from_json(data) == t
    assert data["terms"][0]["key"][0][0] in {"v1", "v2", "v3"}


def test_ts_invariance_and_homomorphism(t2):
    rng = random.Random(7)
    win = range(2)
    for m in (1, 2, 3):
        basis = ts_basis(t2, m)
        keys = all_pure_keys(t2, m)
        for _ in range(35):
            u = random_uelem(t2, rng, win, max_len=2)
            w = random_uelem(t2, rng, win, max_len=2)
            img = act_elem(u, v_vector(rng.choice(basis)))
            assert is_symmetric(img)
            t = Tensor.pure(rng.choice(keys))
            assert act_elem(u * w, t) == act_elem(u, act_elem(w, t))


def test_highest_weight_vector():
    assert highest_weight_vector(0) == Tensor.pure(())
    assert highest_weight_vector(1) == pure((V1, 0))
    assert highest_weight_vector(2) == pure((V1, 0), (V1, 0))


def test_degree_mismatch():
    with pytest.raises(ValueError):
        pure((V1, 0)) + pure((V1, 0), (V1, 0))
    with pytest.raises(ValueError):
        Tensor(2, {((V1, 0),): 1})


def test_normal_form_action_consistency(t2):
    # acting by an unnormalized word equals acting by its normal form
    word = [("x1", 1), ("xm1", 0), ("xm3", 1), ("x2", 0)]
    t = pure((V1, 0), (V2, 1))
    direct = t
    for fam, k in reversed(word):
        direct = act_elem(UElem.generator(t2, fam, k), direct)
    assert act_elem(normal_form(t2, word), t) == direct
