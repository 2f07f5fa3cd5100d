from itertools import product

from sl21weyl.algebra import PolyAlgebra, TruncAlgebra
from sl21weyl.sl21 import BRACKET_TABLE, GENS, PARITY, ad_eigenvalue, bracket, bracket_elems, bracket_tensor


def test_table_examples():
    assert bracket("x1", "x2") == {"x3": 1}
    assert bracket("x3", "xm3") == {"h1": 1, "h2": 1}
    assert bracket("x1", "xm1") == {"h1": 1}
    assert bracket("xm1", "x1") == {"h1": -1}
    assert bracket("x2", "x2") == {}


def test_parities():
    assert {g for g in GENS if PARITY[g]} == {"x2", "x3", "xm2", "xm3"}


def test_table_has_all_entries():
    assert len(BRACKET_TABLE) == 8
    assert all(len(row) == 8 for row in BRACKET_TABLE.values())


def test_bracket_tensor_examples():
    poly, t2 = PolyAlgebra(), TruncAlgebra(2)
    assert bracket_tensor("x1", {1: 1}, "xm1", {1: 1}, poly) == [("h1", {2: 1})]
    assert bracket_tensor("x1", {1: 1}, "xm1", {1: 1}, t2) == []
    assert bracket_tensor("x3", {0: 1}, "x3", {1: 1}, poly) == []


def test_super_antisymmetry():
    for z, w in product(GENS, repeat=2):
        sign = -((-1) ** (PARITY[z] * PARITY[w]))
        assert bracket(z, w) == {g: sign * c for g, c in bracket(w, z).items()}


def test_super_jacobi():
    for x, y, z in product(GENS, repeat=3):
        total: dict = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            s = (-1) ** (PARITY[a] * PARITY[c])
            for g, v in bracket_elems({a: 1}, bracket(b, c)).items():
                total[g] = total.get(g, 0) + s * v
        assert not any(total.values()), (x, y, z)


def test_ad_h1_eigenvalues():
    expected = {"x1": 2, "xm1": -2, "x2": -1, "xm2": 1, "x3": 1, "xm3": -1}
    for x, ev in expected.items():
        assert bracket("h1", x) == {x: ev}
        assert ad_eigenvalue("h1", x) == ev


def test_sl2_triple():
    assert bracket("h1", "x1") == {"x1": 2}
    assert bracket("h1", "xm1") == {"xm1": -2}
    assert bracket("x1", "xm1") == {"h1": 1}
