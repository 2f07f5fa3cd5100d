from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl21weyl.scalars import fmt_rat, int_binomial, parse_rat, rat_arith

rats = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def test_add_is_exact():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_mul_by_zero():
    assert rat_arith(Fraction(7, 3), 0, "mul") == 0


def test_canonical_form():
    q = rat_arith(Fraction(2, 4), 0, "add")
    assert (q.numerator, q.denominator) == (1, 2)
    assert fmt_rat(q) == "1/2"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")


def test_unknown_kind():
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (-1, 2, 1), (-3, 3, -10), (2, 5, 0)])
def test_int_binomial(n, k, expected):
    assert int_binomial(n, k) == expected


def test_pascal_rule():
    for n in range(-20, 21):
        for k in range(1, 11):
            assert int_binomial(n, k) == int_binomial(n - 1, k - 1) + int_binomial(n - 1, k)


@given(rats, rats, rats)
def test_add_mul_assoc_comm(a, b, c):
    assert rat_arith(rat_arith(a, b, "add"), c, "add") == rat_arith(a, rat_arith(b, c, "add"), "add")
    assert rat_arith(rat_arith(a, b, "mul"), c, "mul") == rat_arith(a, rat_arith(b, c, "mul"), "mul")
    assert rat_arith(a, b, "add") == rat_arith(b, a, "add")
    assert rat_arith(a, b, "mul") == rat_arith(b, a, "mul")


@given(rats)
def test_serialization_round_trip(q):
    assert parse_rat(fmt_rat(q)) == q


def test_integer_serialization():
    assert fmt_rat(Fraction(6, 3)) == "2"
    assert fmt_rat(Fraction(-3, 6)) == "-1/2"


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a", True, "1//2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)
