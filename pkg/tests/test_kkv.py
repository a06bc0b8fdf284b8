from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3bps import (
    SymLaurentPoly,
    bps_grid_from_kkv,
    kkv_product,
    lambda_decompose,
    lambda_power,
    yau_zaslow_series,
)
from k3bps.kkv import KkvBpsGrid

REFERENCE_TABLE = {
    0: (1,),
    1: (24, -2),
    2: (324, -54, 3),
    3: (3200, -800, 88, -4),
    4: (25650, -8550, 1401, -126, 5),
}


def test_product_constant_term_is_one():
    assert kkv_product(0).coefficient(0) == SymLaurentPoly.constant(1)


def test_product_first_coefficient_by_factorwise_expansion():
    # to first order: 20 from (1-q)^-20, 2z from (1-zq)^-2, 2/z from (1-q/z)^-2
    assert kkv_product(1).coefficient(1) == SymLaurentPoly.from_half({0: 20, 1: 2})


def test_product_first_coefficient_at_z_one():
    assert kkv_product(1).coefficient(1).evaluate_at_one() == 24


def test_product_degree_bound(grid20):
    series = kkv_product(12)
    for h in range(13):
        assert series.coefficient(h).degree() <= h


def test_lambda_power_basis_element():
    lam = lambda_power(1)
    assert lam == SymLaurentPoly({1: 1, 0: -2, -1: 1})
    assert lambda_decompose(lam) == [0, 1]


def test_lambda_decompose_of_first_kkv_coefficient():
    coeffs = lambda_decompose(SymLaurentPoly.from_half({0: 20, 1: 2}))
    assert coeffs == [24, 2]


def test_lambda_decompose_constant():
    assert lambda_decompose(SymLaurentPoly.constant(7)) == [7]
    assert lambda_decompose(SymLaurentPoly.zero()) == []


halves = st.dictionaries(
    st.integers(min_value=0, max_value=6),
    st.fractions(min_value=-9, max_value=9, max_denominator=6),
    max_size=6,
)


@given(halves)
def test_lambda_decompose_recompose_is_identity(half):
    poly = SymLaurentPoly.from_half(half)
    recomposed = SymLaurentPoly.zero()
    for g, c in enumerate(lambda_decompose(poly)):
        recomposed = recomposed + lambda_power(g) * c
    assert recomposed == poly


def test_grid_matches_reference_table():
    grid = bps_grid_from_kkv(4)
    for h, column in REFERENCE_TABLE.items():
        assert grid.column(h) == column


def test_grid_corner_value():
    assert bps_grid_from_kkv(0).value(0, 0) == 1


def test_vanishing_above_diagonal(grid20):
    for h in range(21):
        for g in range(h + 1, 23):
            assert grid20.value(g, h) == 0


def test_diagonal_law(grid20):
    for h in range(21):
        assert grid20.value(h, h) == (-1) ** h * (h + 1)


def test_negative_square_columns_are_empty(grid20):
    assert grid20.value(0, -3) == 0


def test_grid_bounds_checked(grid20):
    with pytest.raises(ValueError, match="beyond the computed bound"):
        grid20.value(0, 21)
    with pytest.raises(ValueError):
        grid20.value(-1, 3)


def test_grid_entries_are_integers(grid20):
    for h in range(21):
        assert all(isinstance(v, int) for v in grid20.column(h))


def test_grid_constructor_enforces_diagonal():
    with pytest.raises(ValueError, match="diagonal"):
        KkvBpsGrid([(1,), (24, 2)])


def test_yau_zaslow_first_values():
    yz = yau_zaslow_series(4)
    assert [yz.coefficient(h) for h in range(5)] == [1, 24, 324, 3200, 25650]
    assert yau_zaslow_series(0).coefficient(0) == 1


def test_yau_zaslow_equals_z_one_specialization():
    h_max = 20
    specialized = kkv_product(h_max).specialize_z_one()
    yz = yau_zaslow_series(h_max)
    for h in range(h_max + 1):
        assert yz.coefficient(h) == specialized.coefficient(h)


def test_yau_zaslow_equals_genus_zero_row(grid20):
    yz = yau_zaslow_series(20)
    for h in range(21):
        assert yz.coefficient(h) == grid20.value(0, h)


def test_yau_zaslow_against_divisor_sum_recurrence():
    # independent oracle: for f = prod (1-q^n)^-c the logarithmic derivative
    # gives n*a(n) = c * sum_{k=1..n} sigma(k) * a(n-k)
    bound = 20
    sigma = [0] * (bound + 1)
    for d in range(1, bound + 1):
        for multiple in range(d, bound + 1, d):
            sigma[multiple] += d
    a = [Fraction(1)] + [Fraction(0)] * bound
    for n in range(1, bound + 1):
        a[n] = 24 * sum(sigma[k] * a[n - k] for k in range(1, n + 1)) / n
    yz = yau_zaslow_series(bound)
    for h in range(bound + 1):
        assert yz.coefficient(h) == a[h]


def test_product_second_coefficient_by_brute_force():
    # truncate each factor at q^2 and multiply out by hand:
    # (1-q)^-20 (1-q^2)^-20 (1-zq)^-2 (1-zq^2)^-2 (1-q/z)^-2 (1-q^2/z)^-2
    # coefficients are lists [q^0, q^1, q^2] of {z-degree: int} dictionaries
    def mul(a, b):
        out = [dict() for _ in range(3)]
        for i in range(3):
            for j in range(3 - i):
                for za, va in a[i].items():
                    for zb, vb in b[j].items():
                        out[i + j][za + zb] = out[i + j].get(za + zb, 0) + va * vb
        return out

    def inv_square(n, zdeg):
        # (1 - z^zdeg * q^n)^-2 = sum_j (j+1) z^(j*zdeg) q^(n*j), cut at q^2
        factor = [dict() for _ in range(3)]
        factor[0][0] = 1
        for j in (1, 2):
            if n * j <= 2:
                factor[n * j][j * zdeg] = j + 1
        return factor

    def inv_twenty(n):
        factor = [dict() for _ in range(3)]
        factor[0][0] = 1
        for j in (1, 2):
            if n * j <= 2:
                factor[n * j][0] = comb(j + 19, 19)
        return factor

    total = [dict() for _ in range(3)]
    total[0][0] = 1
    for piece in (
        inv_twenty(1),
        inv_twenty(2),
        inv_square(1, 1),
        inv_square(2, 1),
        inv_square(1, -1),
        inv_square(2, -1),
    ):
        total = mul(total, piece)
    expected = SymLaurentPoly(total[2])
    assert kkv_product(2).coefficient(2) == expected
    # and its lambda coefficients carry the h = 2 column of the grid
    assert [(-1) ** g * c for g, c in enumerate(lambda_decompose(expected))] == [324, -54, 3]
