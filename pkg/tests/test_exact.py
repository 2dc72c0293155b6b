"""Tests for the exact arithmetic core."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcycles.exact import (
    MultiPoly,
    binomial,
    compositions,
    double_factorial,
    format_rational,
    normalize_partition,
    parse_rational,
    partitions_of,
    stirling_first_signed,
    stirling_second,
)


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

def test_rational_parse_and_format():
    assert parse_rational("29/720") == Fraction(29, 720)
    assert parse_rational("3") == 3
    assert parse_rational("3/1") == 3
    assert parse_rational("-1/1440") == Fraction(-1, 1440)
    assert format_rational(Fraction(6, 2)) == "3"
    assert format_rational(Fraction(-29, 720)) == "-29/720"
    assert format_rational(5) == "5"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("pi")


fractions_st = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(fractions_st, fractions_st, fractions_st)
@settings(max_examples=100)
def test_rational_field_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    if p:
        assert p * (1 / p) == 1


# ---------------------------------------------------------------------------
# counting sequences
# ---------------------------------------------------------------------------

def test_double_factorial_values():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(7) == 105
    assert double_factorial(8) == 384
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_stirling_first_signed():
    # v(v-1)(v-2) = v^3 - 3v^2 + 2v
    assert stirling_first_signed(0, 0) == 1
    assert stirling_first_signed(3, 1) == 2
    assert stirling_first_signed(3, 2) == -3
    # v(v-1)(v-2)(v-3) = v^4 - 6v^3 + 11v^2 - 6v
    assert stirling_first_signed(4, 2) == 11
    with pytest.raises(ValueError):
        stirling_first_signed(3, 4)
    with pytest.raises(ValueError):
        stirling_first_signed(-1, 0)


def test_stirling_second():
    assert stirling_second(5, 5) == 1
    assert stirling_second(3, 2) == 3
    assert stirling_second(4, 2) == 7
    assert stirling_second(2, 3) == 0  # more blocks than elements
    assert stirling_second(0, 0) == 1
    with pytest.raises(ValueError):
        stirling_second(-1, 0)


def test_stirling_duality():
    for n in range(11):
        for m in range(11):
            total = sum(
                stirling_first_signed(n, k) * stirling_second(k, m)
                for k in range(n + 1)
            )
            assert total == (1 if n == m else 0)


def test_surjection_count_via_stirling():
    # n! S2(m, n) counts surjections {1..m} -> {1..n}; check by enumeration
    import itertools

    for m in range(1, 6):
        for n in range(1, m + 1):
            count = sum(
                1
                for f in itertools.product(range(n), repeat=m)
                if set(f) == set(range(n))
            )
            assert count == factorial(n) * stirling_second(m, n)


def test_binomial_extended():
    assert binomial(-1, 0) == 1
    assert binomial(-1, 2) == 1
    assert binomial(0, 1) == 0
    assert binomial(5, 2) == comb(5, 2)
    assert binomial(3, -1) == 0


# ---------------------------------------------------------------------------
# partitions and compositions
# ---------------------------------------------------------------------------

def test_partitions_of_order():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(4, max_parts=2) == [(4,), (3, 1), (2, 2)]
    assert partitions_of(5)[0] == (5,)
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_partitions_counts():
    # partition numbers p(0..9)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert [len(partitions_of(n)) for n in range(10)] == expected


def test_normalize_partition():
    assert normalize_partition([1, 3, 2]) == (3, 2, 1)
    assert normalize_partition(()) == ()
    with pytest.raises(ValueError):
        normalize_partition([2, 0])


def test_compositions_examples():
    assert list(compositions(1, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert list(compositions(0, 5)) == [(0, 0, 0, 0, 0)]
    assert len(list(compositions(2, 3))) == 6
    with pytest.raises(ValueError):
        list(compositions(1, 0))


def test_compositions_counts_and_distinct():
    for m in range(9):
        for slots in range(1, 8):
            seen = list(compositions(m, slots))
            assert len(seen) == len(set(seen)) == comb(m + slots - 1, slots - 1)
            assert all(sum(c) == m and len(c) == slots for c in seen)


# ---------------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------------

def xvars(n):
    return [MultiPoly.variable(n, i) for i in range(n)]


def test_poly_basic_arithmetic():
    x0, x1 = xvars(2)
    assert x0 * x1 == MultiPoly(2, {(1, 1): 1})
    assert (x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1
    assert (x0 - x0) == MultiPoly.zero(2)
    assert not MultiPoly.zero(2)
    assert 3 * x0 == x0 * 3
    assert (x0 / 2).coefficient((1, 0)) == Fraction(1, 2)


def test_poly_full_from_reduced():
    # multiplying the two-tree generating polynomial by x0
    x0, x1, x2 = xvars(3)
    reduced = (x0 + x1) * x2
    assert x0 * reduced == x0 * x0 * x2 + x0 * x1 * x2


def test_poly_arity_errors():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) * MultiPoly.variable(3, 0)
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 2)
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0).eval((1,))
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0).substitute(5, MultiPoly.zero(2))


def test_poly_substitute_examples():
    x0, x1, x2 = xvars(3)
    assert (x1 * x2).substitute(1, x0 + x1) == (x0 + x1) * x2
    assert ((x0 + x1) * x2).substitute(0, MultiPoly.zero(3)) == x1 * x2
    p = (x0 + 2 * x1) * x2
    assert p.substitute(2, x2) == p


def test_poly_eval():
    x0, x1, x2 = xvars(3)
    p = (x0 + x1) * x2
    assert p.eval((1, 2, 3)) == 9
    assert p.eval((0, 0, 5)) == 0
    assert p.eval((Fraction(1, 2), Fraction(1, 2), 1)) == 1
    assert MultiPoly.constant(3, 7).eval((0, 0, 0)) == 7


def test_poly_degree_and_homogeneity():
    x0, x1 = xvars(2)
    p = x0 * x0 + x0 * x1
    assert p.degree() == 2
    assert p.is_homogeneous(2)
    assert not (p + x0).is_homogeneous()
    assert p.degree_in(0) == 2
    assert p.degree_in(1) == 1
    assert MultiPoly.zero(2).degree() == 0


def test_poly_extended():
    x0, x1 = xvars(2)
    wide = (x0 * x1).extended(4)
    assert wide.num_vars == 4
    assert wide.coefficient((1, 1, 0, 0)) == 1
    with pytest.raises(ValueError):
        wide.extended(2)


def test_poly_serialization_schema():
    x0, x1 = xvars(2)
    p = x0 * x0 - Fraction(1, 2) * x1
    obj = p.to_obj()
    assert obj == [
        {"exp": [0, 1], "coeff": "-1/2"},
        {"exp": [2, 0], "coeff": "1"},
    ]
    assert MultiPoly.from_obj(obj) == p
    assert MultiPoly.from_obj([], num_vars=3) == MultiPoly.zero(3)
    with pytest.raises(ValueError):
        MultiPoly.from_obj([])


def test_poly_rendering():
    x0, x1 = xvars(2)
    p = 2 * x0 * x0 - x1
    assert p.text() == "2*x0^2 - x1"
    assert p.latex() == "2 x_{0}^{2} - x_{1}"
    assert MultiPoly.zero(2).text() == "0"
    assert (Fraction(-1, 2) * x1).latex() == "-\\frac{1}{2} x_{1}"


def test_poly_immutable():
    p = MultiPoly.variable(2, 0)
    with pytest.raises(AttributeError):
        p.num_vars = 3


exps_st = st.tuples(*[st.integers(0, 3)] * 3)
coeff_st = st.fractions(min_value=-9, max_value=9, max_denominator=4)
poly_st = st.dictionaries(exps_st, coeff_st, max_size=5).map(
    lambda d: MultiPoly(3, d)
)


@given(poly_st, poly_st, poly_st)
@settings(max_examples=60, deadline=None)
def test_poly_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)


@given(poly_st, poly_st, poly_st)
@settings(max_examples=40, deadline=None)
def test_poly_substitute_composes(p, q, r):
    # substituting q then r for the same variable equals substituting q[x1 := r]
    left = p.substitute(1, q).substitute(1, r)
    right = p.substitute(1, q.substitute(1, r))
    assert left == right


@given(poly_st)
@settings(max_examples=60, deadline=None)
def test_poly_serialization_roundtrip(p):
    assert MultiPoly.from_obj(p.to_obj(), num_vars=3) == p
