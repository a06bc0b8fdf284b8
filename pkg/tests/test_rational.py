from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3bps import (
    RationalFunction,
    check_q_inversion_symmetry,
    ratfn_eq,
    ratfn_expand,
)

coeffs = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=5
)
nonzero_polys = coeffs.filter(lambda cs: any(cs))
ratfns = st.builds(RationalFunction, coeffs, nonzero_polys)


FOOTNOTE = RationalFunction((0, 1), (1, 2, 1))  # q / (1+q)^2


def test_canonical_form_reduces_common_factors():
    # q*(1+q) / (1+q) -> q
    assert RationalFunction((0, 1, 1), (1, 1)) == RationalFunction((0, 1))
    # denominator is normalized monic
    fn = RationalFunction((2,), (0, 4))
    assert fn.denominator == (0, 1)
    assert fn.numerator == (Fraction(1, 2),)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction((1,), (0,))


def test_ratfn_eq_examples():
    assert ratfn_eq(FOOTNOTE, FOOTNOTE)
    with_common_factor = RationalFunction((0, 1, 1), (1, 3, 3, 1))  # (q^2+q)/(1+q)^3
    assert ratfn_eq(FOOTNOTE, with_common_factor)
    assert with_common_factor == FOOTNOTE
    assert not ratfn_eq(RationalFunction((0, 1)), RationalFunction((0, 0, 1)))


def test_expand_footnote_series():
    series = ratfn_expand(FOOTNOTE, 10)
    assert series.min_degree == 1
    for n in range(1, 11):
        assert series.coefficient(n) == (-1) ** (n + 1) * n


def test_expand_geometric():
    series = ratfn_expand(RationalFunction((1,), (1, -1)), 6)
    assert all(series.coefficient(n) == 1 for n in range(7))


def test_expand_pole_at_zero():
    series = ratfn_expand(RationalFunction((1,), (0, 1)), 3)
    assert series.min_degree == -1
    assert series.coefficient(-1) == 1
    assert all(series.coefficient(n) == 0 for n in range(0, 4))


def test_expand_zero_function():
    assert ratfn_expand(RationalFunction.zero(), 5).is_zero


def test_inversion_symmetry_examples():
    assert check_q_inversion_symmetry(FOOTNOTE)
    assert check_q_inversion_symmetry(RationalFunction((1, 0, 1), (0, 1)))  # q + 1/q
    assert not check_q_inversion_symmetry(RationalFunction((0, 1)))  # q


def test_reciprocal_substitution_is_involutive():
    fn = RationalFunction((1, 2, 0, 5), (0, 0, 1, 7))
    assert ratfn_eq(fn.reciprocal_substitution().reciprocal_substitution(), fn)


def test_monomial_and_pow():
    q = RationalFunction.monomial(1)
    assert q ** 3 == RationalFunction.monomial(3)
    assert q ** -2 == RationalFunction.monomial(-2)
    assert RationalFunction.monomial(-1) * q == RationalFunction.one()


def test_substitute_scaled_power():
    # q -> -q^2 inside q/(1+q)^2 gives -q^2/(1-q^2)^2
    composed = FOOTNOTE.substitute_scaled_power(-1, 2)
    expected = RationalFunction((0, 0, -1), (1, 0, -2, 0, 1))
    assert composed == expected


def test_evaluate_exact():
    assert FOOTNOTE.evaluate(Fraction(1, 2)) == Fraction(2, 9)
    with pytest.raises(ZeroDivisionError):
        FOOTNOTE.evaluate(Fraction(-1))


@given(ratfns, ratfns, ratfns)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(ratfns, ratfns)
def test_expand_is_additive(a, b):
    order = 5
    lhs = ratfn_expand(a, order) + ratfn_expand(b, order)
    rhs = ratfn_expand(a + b, order)
    assert lhs.agrees_with(rhs)


@given(ratfns)
def test_cross_multiplication_agrees_with_canonical_equality(a):
    doubled = RationalFunction(
        tuple(2 * c for c in a.numerator), tuple(2 * c for c in a.denominator)
    )
    assert ratfn_eq(a, doubled)
    assert a == doubled


@given(ratfns, st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=7))
def test_symmetry_implies_equal_values_at_reciprocal_points(a, q0):
    symmetric = a + a.reciprocal_substitution()
    assert check_q_inversion_symmetry(symmetric)
    try:
        left = symmetric.evaluate(q0)
        right = symmetric.evaluate(1 / q0)
    except ZeroDivisionError:
        return
    assert left == right
