"""The BPS (Gopakumar-Vafa) transform between Gromov-Witten potentials and
integer state counts.

For a threefold whose curve classes are multiples of one primitive class, the
genus-graded Gromov-Witten series at grade D is

    sum_{g} N_{g,D} u^(2g-2)
        = sum_{k | D} (1/k) * sum_{g} n_{g,D/k} * (2*sin(k*u/2))^(2g-2).

The relation is upper triangular with unit diagonal (grade-by-grade over
divisors, genus-by-genus within a grade), so it inverts exactly; the inverse
need not produce integers for arbitrary rational input, and integrality is
reported rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .scalars import as_fraction
from .series import LaurentSeries


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def sine_bracket(d: int, g: int, order: int) -> LaurentSeries:
    """Laurent series of ``(2*sin(d*u/2))**(2g-2)`` in u.

    The leading term is ``(d*u)**(2g-2)``, all degrees are even and all
    coefficients rational; for g = 0 the series starts at u^-2.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if g < 0:
        raise ValueError("g must be >= 0")
    if order < 2 * g - 2:
        raise ValueError(f"truncation order {order} cannot hold the leading term u^{2 * g - 2}")
    if g == 1:
        return LaurentSeries.one("u", order)
    # (2*sin(d*u/2))**2 = 2 - 2*cos(d*u): even, starts at d^2*u^2.  Carry four
    # orders of margin so that squaring/inverting still reaches `order`.
    work_order = order + 4
    coeffs = [Fraction(0)] * (work_order + 1)
    for k in range(1, work_order // 2 + 1):
        coeffs[2 * k] = Fraction(2 * (-1) ** (k + 1) * d ** (2 * k), factorial(2 * k))
    squared = LaurentSeries("u", 0, coeffs, work_order)
    return (squared ** (g - 1)).truncate(order)


class BpsTable:
    """Finite table of BPS state counts n_{g, d*beta} keyed by (genus, grade).

    Values are integers for honest BPS data; rational values are accepted so
    that the inverse transform can report non-integrality instead of failing.
    ``square_labels`` optionally records, per grade, the square label h of the
    class d*beta (kept as plain metadata).
    """

    __slots__ = ("entries", "square_labels")

    def __init__(
        self,
        entries: Mapping[tuple[int, int], object],
        square_labels: Mapping[int, int] | None = None,
    ) -> None:
        kept: dict[tuple[int, int], object] = {}
        for (g, d), value in entries.items():
            g, d = int(g), int(d)
            if g < 0:
                raise ValueError("genus must be >= 0")
            if d < 1:
                raise ValueError("class grade must be >= 1")
            if not isinstance(value, int):
                value = as_fraction(value)
                if value.denominator == 1:
                    value = int(value)
            if value:
                kept[(g, d)] = value
        object.__setattr__(self, "entries", kept)
        object.__setattr__(
            self, "square_labels", dict(square_labels) if square_labels is not None else None
        )

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("BpsTable is immutable")

    @classmethod
    def single_state(cls) -> "BpsTable":
        """One genus-0 state in the primitive class: the isolated rational curve."""
        return cls({(0, 1): 1})

    def value(self, g: int, d: int):
        return self.entries.get((g, d), 0)

    def genus_bound(self, d: int) -> int:
        """Largest genus with a nonzero entry at grade d (-1 when none)."""
        return max((g for (g, dd) in self.entries if dd == d), default=-1)

    def max_genus(self) -> int:
        return max((g for (g, _) in self.entries), default=-1)

    @property
    def is_integral(self) -> bool:
        return not self.non_integral_entries()

    def non_integral_entries(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.entries.items() if not isinstance(v, int))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BpsTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"BpsTable({self.entries!r})"


class GwPotential:
    """Gromov-Witten invariants N_{g, d*beta} with an explicit u-truncation."""

    __slots__ = ("entries", "u_truncation")

    def __init__(self, entries: Mapping[tuple[int, int], object], u_truncation: int) -> None:
        kept: dict[tuple[int, int], Fraction] = {}
        for (g, d), value in entries.items():
            g, d = int(g), int(d)
            if g < 0 or d < 1:
                raise ValueError("invalid (genus, grade) key")
            value = as_fraction(value)
            if 2 * g - 2 > u_truncation:
                raise ValueError(
                    f"entry at genus {g} lies beyond the u-truncation {u_truncation}"
                )
            if value:
                kept[(g, d)] = value
        object.__setattr__(self, "entries", kept)
        object.__setattr__(self, "u_truncation", u_truncation)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("GwPotential is immutable")

    def value(self, g: int, d: int) -> Fraction:
        return self.entries.get((g, d), Fraction(0))

    def grade_series(self, d: int) -> LaurentSeries:
        """The u-series sum_g N_{g,d} u^(2g-2) at one grade."""
        picked = {2 * g - 2: v for (g, dd), v in self.entries.items() if dd == d}
        if not picked:
            return LaurentSeries.zero("u", self.u_truncation)
        lo = min(picked)
        coeffs = [picked.get(k, Fraction(0)) for k in range(lo, self.u_truncation + 1)]
        return LaurentSeries("u", lo, coeffs, self.u_truncation)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GwPotential):
            return NotImplemented
        return self.u_truncation == other.u_truncation and self.entries == other.entries

    def __repr__(self) -> str:
        return f"GwPotential({self.entries!r}, u_truncation={self.u_truncation})"


def gw_grade_series(table: BpsTable, d: int, u_order: int) -> LaurentSeries:
    """Forward transform at a single grade, as a u-series.

    Entries whose leading degree 2g-2 exceeds the truncation contribute
    nothing below it and are skipped.
    """
    total = LaurentSeries.zero("u", u_order)
    for k in divisors(d):
        e = d // k
        weight = Fraction(1, k)
        for (g, grade), value in table.entries.items():
            if grade != e or 2 * g - 2 > u_order:
                continue
            total = total + sine_bracket(k, g, u_order) * (weight * as_fraction(value))
    for deg, c in total.items():
        if deg % 2 and c:
            raise ArithmeticError(
                f"odd-degree coefficient {c} at u^{deg}: the sine brackets are even, "
                "so this signals an internal arithmetic bug"
            )
    return total


def gw_from_bps(table: BpsTable, d_max: int, u_order: int | None = None) -> GwPotential:
    """Gromov-Witten potential generated by a BPS table, for grades <= d_max."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    if u_order is None:
        u_order = 2 * max(table.max_genus(), 0) + 2
    entries: dict[tuple[int, int], Fraction] = {}
    top_genus = (u_order + 2) // 2
    for d in range(1, d_max + 1):
        series = gw_grade_series(table, d, u_order)
        for g in range(0, top_genus + 1):
            value = series.coefficient(2 * g - 2)
            if value:
                entries[(g, d)] = value
    return GwPotential(entries, u_order)


def bps_from_gw(potential: GwPotential, d_max: int) -> BpsTable:
    """The unique BPS table whose forward transform matches the potential.

    Works grade-by-grade (divisor recursion) and genus-by-genus (triangular
    solve against the unit-leading sine brackets).  Non-integer results are
    kept as Fractions and reported by the returned table, not rejected.
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    u_order = potential.u_truncation
    if u_order < -2:
        raise ValueError("u-truncation below u^-2 cannot hold any genus-0 data")
    top_genus = (u_order + 2) // 2
    entries: dict[tuple[int, int], object] = {}
    for d in range(1, d_max + 1):
        residual = potential.grade_series(d)
        for k in divisors(d):
            if k == 1:
                continue
            e = d // k
            weight = Fraction(1, k)
            for g in range(0, top_genus + 1):
                value = entries.get((g, e))
                if value:
                    residual = residual - sine_bracket(k, g, u_order) * (
                        weight * as_fraction(value)
                    )
        for g in range(0, top_genus + 1):
            c = residual.coefficient(2 * g - 2)
            if c:
                entries[(g, d)] = c
                residual = residual - sine_bracket(1, g, u_order) * c
    return BpsTable(entries, square_labels=None)
