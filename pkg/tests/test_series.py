from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfkit.series import GFSeries, to_fraction

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def series(order, unit_constant=False):
    tail = st.lists(fracs, min_size=order, max_size=order)
    if unit_constant:
        return tail.map(lambda t: GFSeries.from_tail(t))
    return st.lists(fracs, min_size=order + 1, max_size=order + 1).map(GFSeries.of)


def test_geometric_reciprocal():
    s = GFSeries.of([1, -1, 0, 0, 0, 0]).reciprocal()
    assert s.coeffs == tuple(Fraction(1) for _ in range(6))


def test_reciprocal_needs_invertible_constant():
    with pytest.raises(ZeroDivisionError):
        GFSeries.of([0, 1]).reciprocal()


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(TypeError):
        GFSeries.of([1, 0.5])


def test_mixed_orders_truncate_to_the_shorter():
    a = GFSeries.of([1, 2, 3])
    b = GFSeries.of([1, 1])
    assert (a + b).coeffs == (2, 3)
    assert (a * b).order == 1


def test_hadamard():
    a, b = GFSeries.of([1, 2, 3]), GFSeries.of([4, 5, 6])
    assert a.hadamard(b).coeffs == (4, 10, 18)


def test_json_roundtrip():
    s = GFSeries.of([1, Fraction(1, 3), -2])
    assert s.to_json() == {"order": 2, "coeffs": ["1", "1/3", "-2"]}
    assert GFSeries.from_json(s.dumps()) == s
    assert str(GFSeries.of([1, 1, 3, 13])) == "1,1,3,13"


@given(series(6), series(6), st.integers(0, 6))
def test_truncation_stable_ring_ops(a, b, m):
    for op in (lambda x, y: x + y, lambda x, y: x - y, lambda x, y: x * y, lambda x, y: x.hadamard(y)):
        assert op(a, b).truncate(m) == op(a.truncate(m), b.truncate(m))


@given(series(6, unit_constant=True), series(6, unit_constant=True), st.integers(0, 6))
def test_truncation_stable_division(a, b, m):
    assert a.reciprocal().truncate(m) == a.truncate(m).reciprocal()
    assert (a / b).truncate(m) == a.truncate(m) / b.truncate(m)
    assert (a * a.reciprocal()) == GFSeries.one(6)
