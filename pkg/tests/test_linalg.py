from fractions import Fraction

import pytest

from sl21weyl.linalg import Echelon, NotInSpanError, in_span, rank


def test_rank_and_dependence():
    vs = [{0: 1, 1: 2}, {1: 1}, {0: 2, 1: 5}]
    assert rank(vs) == 2
    assert in_span(vs[:2], {0: 3, 1: 1})
    assert not in_span([{0: 1}], {1: 1})


def test_solve_returns_input_coordinates():
    ech = Echelon()
    inputs = [{"a": 1, "b": 1}, {"b": 1, "c": 1}, {"c": 2}]
    assert all(ech.add(v) for v in inputs)
    target = {"a": 2, "b": 5, "c": 1}
    combo = ech.solve(target)
    rebuilt: dict = {}
    for i, c in combo.items():
        for k, v in inputs[i].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * v
    assert {k: v for k, v in rebuilt.items() if v} == target
    assert combo == {0: 2, 1: 3, 2: Fraction(-1)}


def test_solve_reports_residual():
    ech = Echelon()
    ech.add({0: 1})
    with pytest.raises(NotInSpanError) as err:
        ech.solve({0: 1, 5: 3})
    assert err.value.coordinate == 5
