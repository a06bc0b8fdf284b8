"""The KKV product formula and the BPS grid of a K3 surface.

The generating identity expanded here is

    sum_{g,h >= 0} (-1)^g * n_{g,h} * (z - 2 + 1/z)^g * q^h
        = prod_{n >= 1} 1 / ((1 - q^n)^20 * (1 - z*q^n)^2 * (1 - q^n/z)^2),

where n_{g,h} is the BPS count for a class of square 2h-2 (independent of its
divisibility).  The q^h coefficient of the right side is a symmetric Laurent
polynomial in z of degree at most h, so writing it in the basis
lambda^g = (z - 2 + 1/z)^g = (sqrt(z) - 1/sqrt(z))^(2g) is an exact triangular
elimination and recovers one genus per power of lambda.

Setting z -> 1 kills every g > 0 term and leaves the Yau-Zaslow genus-0
series prod (1 - q^n)^(-24).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .series import LaurentSeries
from .symlaurent import SymLaurentPoly


def _euler_power_coefficients(q_order: int, exponent: int) -> list[int]:
    """Integer coefficients of prod_{n>=1} (1 - q^n)^(-exponent) up to q^q_order.

    The factor at n only contributes from q^n on, so the product over
    n <= q_order is exact to this order.
    """
    out = [0] * (q_order + 1)
    out[0] = 1
    for n in range(1, q_order + 1):
        for h in range(q_order, n - 1, -1):
            acc = out[h]
            j, base = 1, h - n
            while base >= 0:
                acc += comb(j + exponent - 1, exponent - 1) * out[base]
                j += 1
                base -= n
            out[h] = acc
    return out


def _z_pair_product(q_order: int) -> list[dict[int, int]]:
    """q-coefficients (as z-Laurent dicts) of prod_n ((1-z*q^n)(1-q^n/z))^(-2).

    The two factors at each n are expanded jointly:
    sum_{j,l >= 0} (j+1)(l+1) z^(j-l) q^(n(j+l)).
    """
    out: list[dict[int, int]] = [dict() for _ in range(q_order + 1)]
    out[0][0] = 1
    for n in range(1, q_order + 1):
        s_max = q_order // n
        factor = {
            s: {2 * j - s: (j + 1) * (s - j + 1) for j in range(s + 1)}
            for s in range(1, s_max + 1)
        }
        for h in range(q_order, n - 1, -1):
            acc = dict(out[h])
            for s in range(1, h // n + 1):
                block = out[h - n * s]
                if not block:
                    continue
                for zd, w in factor[s].items():
                    for zd0, v0 in block.items():
                        key = zd0 + zd
                        acc[key] = acc.get(key, 0) + v0 * w
            out[h] = acc
    return out


class KkvSeries:
    """Truncated expansion of the KKV product: one symmetric z-polynomial per q^h."""

    __slots__ = ("q_order", "coefficients")

    def __init__(self, q_order: int, coefficients: tuple[SymLaurentPoly, ...]) -> None:
        if q_order < 0:
            raise ValueError("q_order must be >= 0")
        if len(coefficients) != q_order + 1:
            raise ValueError("need exactly one coefficient per degree 0..q_order")
        for h, poly in enumerate(coefficients):
            if poly.degree() > h:
                raise ArithmeticError(
                    f"q^{h} coefficient has z-degree {poly.degree()} > {h}; "
                    "the product expansion violated its degree bound"
                )
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(self, "coefficients", tuple(coefficients))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("KkvSeries is immutable")

    def coefficient(self, h: int) -> SymLaurentPoly:
        if not 0 <= h <= self.q_order:
            raise ValueError(f"q^{h} is outside the computed window 0..{self.q_order}")
        return self.coefficients[h]

    def specialize_z_one(self) -> LaurentSeries:
        """The q-series obtained by z -> 1."""
        return LaurentSeries(
            "q", 0, [poly.evaluate_at_one() for poly in self.coefficients], self.q_order
        )

    def __repr__(self) -> str:
        return f"KkvSeries(q_order={self.q_order})"


def kkv_product(q_order: int) -> KkvSeries:
    """Expand the KKV product exactly up to q^q_order."""
    if q_order < 0:
        raise ValueError("q_order must be >= 0")
    plain = _euler_power_coefficients(q_order, 20)
    paired = _z_pair_product(q_order)
    polys = []
    for h in range(q_order + 1):
        acc: dict[int, int] = {}
        for a in range(h + 1):
            scale = plain[a]
            if not scale:
                continue
            for zd, v in paired[h - a].items():
                acc[zd] = acc.get(zd, 0) + scale * v
        polys.append(SymLaurentPoly(acc))
    return KkvSeries(q_order, tuple(polys))


@lru_cache(maxsize=None)
def lambda_power(g: int) -> SymLaurentPoly:
    """The genus basis element lambda^g with lambda = z - 2 + 1/z."""
    if g < 0:
        raise ValueError("g must be >= 0")
    if g == 0:
        return SymLaurentPoly.constant(1)
    return lambda_power(g - 1) * SymLaurentPoly({1: 1, 0: -2, -1: 1})


def lambda_decompose(poly: SymLaurentPoly) -> list[Fraction]:
    """Coefficients c_g with poly = sum_g c_g * lambda^g.

    lambda^g is the unique basis element with leading z-degree g (coefficient
    1 there), so eliminating from the top degree down is exact and unique.
    """
    if poly.is_zero:
        return []
    top = poly.degree()
    out = [Fraction(0)] * (top + 1)
    work = poly
    for g in range(top, 0, -1):
        c = work.coefficient(g)
        if c:
            out[g] = c
            work = work - lambda_power(g) * c
        if work.degree() >= g:
            raise ArithmeticError("triangular elimination failed to lower the degree")
    out[0] = work.coefficient(0)
    return out


class KkvBpsGrid:
    """The triangular grid n_{g,h} for 0 <= g <= h <= h_max.

    Entries above the diagonal vanish and the diagonal is the signed Euler
    characteristic (-1)^h * (h+1) of the h-dimensional linear system; both are
    enforced at construction.
    """

    __slots__ = ("columns",)

    def __init__(self, columns) -> None:
        cols = []
        for h, column in enumerate(columns):
            column = tuple(int(c) for c in column)
            if len(column) != h + 1:
                raise ValueError(f"column {h} must hold genera 0..{h}")
            if column[h] != (-1) ** h * (h + 1):
                raise ValueError(
                    f"diagonal entry n_{{{h},{h}}} = {column[h]} violates (-1)^h*(h+1)"
                )
            cols.append(column)
        if not cols:
            raise ValueError("grid needs at least the h = 0 column")
        object.__setattr__(self, "columns", tuple(cols))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("KkvBpsGrid is immutable")

    @property
    def h_max(self) -> int:
        return len(self.columns) - 1

    def value(self, g: int, h: int) -> int:
        """n_{g,h}; classes of square below -2 (h < 0) carry no states."""
        if g < 0:
            raise ValueError("genus must be >= 0")
        if h < 0:
            return 0
        if h > self.h_max:
            raise ValueError(f"h = {h} beyond the computed bound {self.h_max}")
        column = self.columns[h]
        return column[g] if g < len(column) else 0

    def column(self, h: int) -> tuple[int, ...]:
        if not 0 <= h <= self.h_max:
            raise ValueError(f"h = {h} beyond the computed bound {self.h_max}")
        return self.columns[h]

    def __eq__(self, other) -> bool:
        if not isinstance(other, KkvBpsGrid):
            return NotImplemented
        return self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    def __repr__(self) -> str:
        return f"KkvBpsGrid(h_max={self.h_max})"


def bps_grid_from_kkv(h_max: int) -> KkvBpsGrid:
    """Extract n_{g,h} for h <= h_max from the KKV product.

    The (-1)^g sign is stripped during extraction so the grid stores the
    counts with their conventional signs; every value must come out an
    integer.
    """
    series = kkv_product(h_max)
    columns = []
    for h in range(h_max + 1):
        cs = lambda_decompose(series.coefficient(h))
        column = []
        for g in range(h + 1):
            c = cs[g] if g < len(cs) else Fraction(0)
            if c.denominator != 1:
                raise ArithmeticError(
                    f"non-integer BPS count {c} at (g={g}, h={h}): arithmetic bug"
                )
            column.append((-1) ** g * int(c))
        columns.append(tuple(column))
    return KkvBpsGrid(columns)


def yau_zaslow_series(h_max: int) -> LaurentSeries:
    """The genus-0 count series prod_{n>=1} (1 - q^n)^(-24) up to q^h_max."""
    if h_max < 0:
        raise ValueError("h_max must be >= 0")
    return LaurentSeries("q", 0, _euler_power_coefficients(h_max, 24), h_max)
