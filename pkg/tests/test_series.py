"""Tests for truncated power series."""

from fractions import Fraction

import pytest

from kcycles.exact import MultiPoly
from kcycles.series import TruncatedSeries, elementary_series


def const(value, num_vars=1):
    return MultiPoly.constant(num_vars, value)


def test_cosh_taylor():
    cosh = elementary_series("cosh", 4)
    assert cosh.coefficient(0) == const(1)
    assert cosh.coefficient(1) == MultiPoly.zero(1)
    assert cosh.coefficient(2) == const(Fraction(1, 2))
    assert cosh.coefficient(4) == const(Fraction(1, 24))


def test_sinh2_plus_cosh2_is_cosh_2t():
    combo = elementary_series("sinh2", 2) + elementary_series("cosh2", 2)
    assert combo.coefficient(0) == const(1)
    assert combo.coefficient(1) == MultiPoly.zero(1)
    assert combo.coefficient(2) == const(2)


def test_sinh_cosh_is_half_sinh_2t():
    sc = elementary_series("sinh_cosh", 5)
    # sinh(2t)/2 has coefficient 4^n/(2n+1)! at t^(2n+1)
    assert sc.coefficient(1) == const(1)
    assert sc.coefficient(3) == const(Fraction(4, 6))
    assert sc.coefficient(5) == const(Fraction(16, 120))
    assert sc.coefficient(2) == MultiPoly.zero(1)


def test_derivative_of_cosh_is_sinh():
    assert elementary_series("cosh", 4).derivative() == elementary_series(
        "sinh", 4
    ).truncated(3)


def test_series_product_truncates():
    cosh = elementary_series("cosh", 4)
    sinh = elementary_series("sinh", 4)
    # cosh^2 - sinh^2 = 1 exactly through the truncation order
    one = TruncatedSeries.from_scalars([1], 4, 1)
    assert cosh * cosh - sinh * sinh == one


def test_scale_by_polynomial():
    x0 = MultiPoly.variable(2, 0)
    series = TruncatedSeries.from_scalars([1, 2, 3], 2, 2).scale(x0)
    assert series.coefficient(1) == 2 * x0
    with pytest.raises(ValueError):
        series.scale(MultiPoly.variable(3, 0))


def test_order_and_arity_errors():
    with pytest.raises(ValueError):
        TruncatedSeries.from_scalars([1], 0, 1)  # zero truncation order rejected
    a = TruncatedSeries.from_scalars([1, 1], 1, 1)
    b = TruncatedSeries.from_scalars([1, 1, 1], 2, 1)
    with pytest.raises(ValueError):
        a + b
    c = TruncatedSeries.from_scalars([1, 1], 1, 2)
    with pytest.raises(ValueError):
        a * c
    with pytest.raises(ValueError):
        TruncatedSeries([const(1), const(1, 2)], 1)
    with pytest.raises(ValueError):
        elementary_series("tanh", 4)
    with pytest.raises(ValueError):
        b.truncated(5)
    with pytest.raises(ValueError):
        b.coefficient(3)
