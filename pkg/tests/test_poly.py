import pytest
from hypothesis import given
from hypothesis import strategies as st

from meshlab.poly import MultiPoly, TruncatedSeries, const, var

X, Y, Z = var("x"), var("y"), var("z")

small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 5), st.integers(-3, 3), max_size=4).map(MultiPoly)


def series(*cs):
    return TruncatedSeries(list(cs))


def test_polynomial_arithmetic():
    assert (X + 1) * (X - 1) == X ** 2 - 1
    assert (X + Y) ** 2 == X * X + 2 * X * Y + Y * Y
    assert 3 - X == -(X - 3)
    assert const(0) == 0 and not const(0)
    assert (X * Y + 2).subs(x=2) == 2 * Y + 2
    assert (X * Y * Z + 1).evaluate(x=2) == 3
    with pytest.raises(ValueError):
        X ** -1


def test_polynomial_text():
    assert str(X ** 2 * Z ** 2 + X * Y * var("v") * var("q")) == "x^2·z^2 + x·y·v·q"
    assert str(1 + 4 * Y + Y ** 2) == "1 + 4·y + y^2"
    assert str(-X + 2) == "2 - x"
    assert str(const(0)) == "0"


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


def test_series_examples():
    assert series(1, 1).truncate(2) * series(1, -1, 0) == series(1, 0, -1)
    assert series(1, -1, 0, 0).reciprocal() == series(1, 1, 1, 1)
    d = TruncatedSeries([1, X * (1 - Z)], 5)
    assert d * d.reciprocal() == TruncatedSeries.one(5)
    assert series(1, 2, 3).shift(1) == series(0, 1, 2)
    assert series(1, 2, 3).shift(5) == series(0, 0, 0)


def test_series_errors():
    with pytest.raises(ZeroDivisionError):
        series(2, 1).reciprocal()
    with pytest.raises(ZeroDivisionError):
        series(1, 1) / series(0, 1)
    with pytest.raises(ValueError):
        series(1, 1) + series(1, 1, 1)
    with pytest.raises(ValueError):
        TruncatedSeries([])


@given(st.lists(small_polys, min_size=1, max_size=5))
def test_reciprocal_is_inverse(tail):
    s = TruncatedSeries([const(1)] + tail)
    assert s * s.reciprocal() == TruncatedSeries.one(s.order)
    assert s.reciprocal().reciprocal() == s


def test_series_text_and_json():
    s = TruncatedSeries([1, X, 1 + Y])
    assert s.to_text() == "t^0: 1\nt^1: x\nt^2: 1 + y"
    j = s.to_json()
    assert j["order"] == 2 and j["variables"] == ["x", "y", "z", "v", "q"]
    assert j["coeffs"][2] == [[[0, 0, 0, 0, 0], 1], [[0, 1, 0, 0, 0], 1]]
