from fractions import Fraction

from sl21weyl.multiset import Multiset, multisets_up_to
from sl21weyl.pbw import UElem, divided_power, in_filtered_span
from sl21weyl.weyl_ops import H, X1, X_tuple, Xm1, clear_caches, p, p1, q1

ZERO = Multiset()
one = Multiset.single


def g(alg, fam, k=0):
    return UElem.generator(alg, fam, k)


def test_x_operators(poly):
    assert Xm1(poly, ZERO) == 1
    assert Xm1(poly, one(0, 2)) == (g(poly, "xm1") ** 2).scale(Fraction(1, 2))
    ab = Multiset({1: 1, 2: 1})
    assert X1(poly, ab) == g(poly, "x1", 1) * g(poly, "x1", 2) == g(poly, "x1", 2) * g(poly, "x1", 1)


def test_h_operators(poly):
    assert H(poly, 1, ZERO) == 1
    assert H(poly, 1, one(1)) == g(poly, "h1", 1)
    assert H(poly, 2, one(1, 2)) == (g(poly, "h2", 1) ** 2).scale(Fraction(1, 2))


def test_tuple_operators(poly):
    assert X_tuple(poly, -3, ()) == 1
    assert X_tuple(poly, -3, (1, 1)) == 0
    assert X_tuple(poly, -3, (2, 1)) == -X_tuple(poly, -3, (1, 2))
    assert X_tuple(poly, 2, (0,)) == g(poly, "x2")


def test_p1_examples(poly):
    b, d = 1, 2
    assert p1(poly, ZERO, ZERO) == 1
    assert p1(poly, ZERO, one(b)) == -g(poly, "h1", b)
    assert p1(poly, one(d), ZERO) == -g(poly, "xm1", d)
    # hand-unrolled: -1/2 ( (h1 b) p1(0, chi_b) + h1 b^2 )
    expected = (g(poly, "h1", b) ** 2).scale(Fraction(1, 2)) - g(poly, "h1", 2 * b).scale(Fraction(1, 2))
    assert p1(poly, ZERO, one(b, 2)) == expected


def test_q1_examples(poly):
    a, b, c, d = 1, 2, 1, 2
    assert q1(poly, one(a), one(b, 2)) == 0
    assert q1(poly, one(d), one(c)) == g(poly, "h1", c + d)
    assert q1(poly, one(0, 2), one(c)) == g(poly, "xm1") * g(poly, "h1", c)


def test_p_examples(poly):
    a = 1
    assert p(poly, ZERO, ZERO, ()) == 1
    assert p(poly, one(a), ZERO, ()) == -g(poly, "h1", a)
    assert p(poly, ZERO, ZERO, (a,)) == g(poly, "xm3", a)


def test_p1_filtered_membership(t3):
    for phi in multisets_up_to(range(3), 4):
        for chi in multisets_up_to(range(3), 4 - len(phi)):
            u = p1(t3, phi, chi)
            assert in_filtered_span(u, {"xm1": len(phi), "h1": len(chi)}, ("xm1", "h1"))


def test_q1_vanishes_below(t3):
    for phi in multisets_up_to(range(3), 3):
        for chi in multisets_up_to(range(3), 4):
            if len(phi) < len(chi):
                assert q1(t3, phi, chi) == 0


def test_q1_closed_form_on_unit(t3):
    for chi in multisets_up_to(range(3), 4, 1):
        for r in range(len(chi), 5):
            lhs = q1(t3, one(0, r), chi)
            assert lhs == divided_power(t3, "xm1", 0, r - len(chi)) * H(t3, 1, chi)


def test_cache_matches_recomputation(t2):
    sets = multisets_up_to(range(2), 3)
    cached = {(a, b): (p1(t2, a, b), q1(t2, a, b)) for a in sets for b in sets}
    clear_caches()
    for (a, b), (u, v) in cached.items():
        assert p1(t2, a, b, cache=False) == u
        assert q1(t2, a, b, cache=False) == v


def test_p_is_p1_times_x3(t2):
    phi1, phi2 = one(1), one(0)
    assert p(t2, phi1, phi2, (0, 1)) == p1(t2, phi2, phi1) * X_tuple(t2, -3, (0, 1))
