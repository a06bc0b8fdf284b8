"""Stable-pairs generating functions and the MNOP change of variables.

For a primitive class of square 2h-2 the connected/reduced pairs series is
the rational function

    P_h(q) = sum_{g=0..h} n_{g,h} * q^(1-g) * (1+q)^(2g-2),

the unique rational function matching the primitive Gromov-Witten series
term-by-term under q = -exp(i*u), via the identity
(2*sin(u/2))^2 = (1+q)^2 / q.  Each summand is palindromic, so P_h is
invariant under q <-> 1/q.

Imprimitive classes d*beta are assembled purely from primitive data keyed by
the square, never by the divisibility, through the multiple cover formula

    P_{d*beta}(q) = sum_{k | d} (1/k) * P_{gamma(k)}( -(-q)^k ),

where gamma(k) is a primitive class with the same square as (d/k)*beta.

The substitution q = -exp(i*u) is carried out formally over Gaussian
rationals; invariance under q <-> 1/q forces the result to be a real, even
Laurent series in u, and both facts are asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bps import BpsTable, divisors, gw_grade_series
from .graded import GradedSeries
from .kkv import KkvBpsGrid
from .rational import (
    RationalFunction,
    _padd,
    _pmul,
    _proot_multiplicity,
    _pval,
    check_q_inversion_symmetry,
)
from .scalars import GaussianRational, imag_part, real_part
from .series import LaurentSeries


@dataclass(frozen=True)
class HodgeLabel:
    """A class d*beta with beta primitive of square 2h-2.

    The derived label ``h_of(k)`` is the square label of the class (d/k)*beta:
    a primitive class of equal square has square label (d/k)^2*(h-1)+1.
    """

    d: int
    h: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("divisibility d must be >= 1")
        if self.h < 0:
            raise ValueError("square label h must be >= 0")

    def h_of(self, k: int) -> int:
        if self.d % k:
            raise ValueError(f"{k} does not divide {self.d}")
        return self.square_label(self.d // k)

    def square_label(self, grade: int) -> int:
        """Square label of the class grade*beta (may be negative for h = 0)."""
        return grade * grade * (self.h - 1) + 1


def primitive_pairs_ratfn(h: int, grid: KkvBpsGrid) -> RationalFunction:
    """Connected pairs series of a primitive class with square label h.

    Labels below h = 0 have square below -2 and carry nothing.
    """
    if h < 0:
        return RationalFunction.zero()
    if h > grid.h_max:
        raise ValueError(f"grid only reaches h = {grid.h_max}, need column {h}")
    shift = max(h - 1, 0)
    # numerator = sum_g n_{g,h} q^(shift+1-g) (1+q)^(2g) over the common
    # denominator q^shift (1+q)^2
    numerator: tuple = ()
    one_plus_q_sq = (Fraction(1), Fraction(2), Fraction(1))
    power = (Fraction(1),)  # (1+q)^(2g)
    for g in range(h + 1):
        n = grid.value(g, h)
        if n:
            term = tuple(Fraction(n) * c for c in power)
            numerator = _padd(numerator, ((Fraction(0),) * (shift + 1 - g)) + term)
        if g < h:
            power = _pmul(power, one_plus_q_sq)
    denominator = ((Fraction(0),) * shift) + one_plus_q_sq
    return _reduced_by_q_and_one_plus_q(numerator, denominator, shift, 2)


def _reduced_by_q_and_one_plus_q(
    numerator: tuple, denominator: tuple, q_pow: int, one_plus_q_pow: int
) -> RationalFunction:
    """Canonicalize when the denominator is exactly q^a * (1+q)^b.

    Those are the only irreducible factors the denominator has, so stripping
    the shared powers of each leaves coprime polynomials.
    """
    if not numerator:
        return RationalFunction.zero()
    strip = min(_pval(numerator), q_pow)
    if strip:
        numerator = numerator[strip:]
        denominator = denominator[strip:]
    minus_one = Fraction(-1)
    shared = min(_proot_multiplicity(numerator, minus_one), one_plus_q_pow)
    for _ in range(shared):
        numerator = _synthetic_divide(numerator, minus_one)
        denominator = _synthetic_divide(denominator, minus_one)
    return RationalFunction._from_coprime(numerator, denominator)


def _synthetic_divide(p: tuple, root: Fraction) -> tuple:
    out = [Fraction(0)] * (len(p) - 1)
    carry = Fraction(0)
    for i in range(len(p) - 1, 0, -1):
        carry = p[i] + carry * root
        out[i - 1] = carry
    return tuple(out)


class PairsLedger:
    """Cache of pairs series per class, with the inversion symmetry enforced.

    ``primitive`` maps a square label h to the primitive series; ``imprimitive``
    maps (d, h) with h the square label of the underlying primitive class.
    """

    def __init__(self, grid: KkvBpsGrid) -> None:
        self.grid = grid
        self._primitive: dict[int, RationalFunction] = {}
        self._imprimitive: dict[tuple[int, int], RationalFunction] = {}

    def _checked(self, fn: RationalFunction, what: str) -> RationalFunction:
        if not check_q_inversion_symmetry(fn):
            raise ArithmeticError(f"{what} is not invariant under q <-> 1/q: arithmetic bug")
        return fn

    def primitive(self, h: int) -> RationalFunction:
        if h not in self._primitive:
            self._primitive[h] = self._checked(
                primitive_pairs_ratfn(h, self.grid), f"primitive series at h={h}"
            )
        return self._primitive[h]

    def imprimitive(self, d: int, h: int) -> RationalFunction:
        if (d, h) not in self._imprimitive:
            self._imprimitive[(d, h)] = self._checked(
                _multiple_cover_sum(HodgeLabel(d, h), self.primitive),
                f"series at (d={d}, h={h})",
            )
        return self._imprimitive[(d, h)]

    @property
    def primitive_entries(self) -> dict[int, RationalFunction]:
        return dict(self._primitive)

    @property
    def imprimitive_entries(self) -> dict[tuple[int, int], RationalFunction]:
        return dict(self._imprimitive)


def _multiple_cover_sum(
    label: HodgeLabel, lookup: Callable[[int], RationalFunction]
) -> RationalFunction:
    total = RationalFunction.zero()
    for k in divisors(label.d):
        prim = lookup(label.h_of(k))
        if prim.is_zero:
            continue
        if k == 1:
            term = prim
        else:
            term = prim.substitute_scaled_power(Fraction((-1) ** (k + 1)), k)
        total = total + term * Fraction(1, k)
    return total


def multiple_cover(
    label: HodgeLabel, grid: KkvBpsGrid, ledger: PairsLedger | None = None
) -> RationalFunction:
    """Pairs series of the class d*beta from primitive data only.

    Implements P_{d*beta}(q) = sum_{k|d} (1/k) * P_{gamma(k)}(-(-q)^k); the
    composition flips the sign of q for even k, so each summand stays
    q <-> 1/q symmetric.
    """
    if ledger is not None:
        return ledger.imprimitive(label.d, label.h)
    return _multiple_cover_sum(label, lambda h: primitive_pairs_ratfn(h, grid))


def _poly_at_minus_exp_iu(p: tuple, u_order: int) -> LaurentSeries:
    """The u-series of p(-exp(i*u)) over Gaussian rationals.

    p(-e^{iu}) = sum_j p_j (-1)^j e^{iju}, so the u^t coefficient is
    (i^t / t!) * sum_j p_j (-1)^j j^t.
    """
    weighted = [(j, c if j % 2 == 0 else -c) for j, c in enumerate(p) if c]
    powers = {j: 1 for j, _ in weighted}
    coeffs = []
    t_factorial = 1
    for t in range(u_order + 1):
        if t:
            t_factorial *= t
            for j in powers:
                powers[j] *= j
        s = sum((c * powers[j] for j, c in weighted), Fraction(0)) / t_factorial
        quadrant = t % 4
        if quadrant == 0:
            coeffs.append(GaussianRational(s, 0))
        elif quadrant == 1:
            coeffs.append(GaussianRational(0, s))
        elif quadrant == 2:
            coeffs.append(GaussianRational(-s, 0))
        else:
            coeffs.append(GaussianRational(0, -s))
    return LaurentSeries("u", 0, coeffs, u_order)


def substitute_q_minus_exp(r: RationalFunction, u_order: int) -> LaurentSeries:
    """Formal substitution q = -exp(i*u) into a rational function of q.

    The pole at u = 0 comes from the denominator vanishing at q = -1 and is
    removed by exact Laurent division.  The result must be a real series in
    even powers of u; a violation means r was not q <-> 1/q symmetric (or an
    arithmetic bug) and raises.
    """
    if r.is_zero:
        raise ValueError("the zero function has an identically vanishing numerator")
    pole = _proot_multiplicity(r.denominator, Fraction(-1))
    zero = _proot_multiplicity(r.numerator, Fraction(-1))
    # Working precision: the quotient of a valuation-`zero` numerator by a
    # valuation-`pole` denominator is valid to work - 2*pole + zero, and the
    # valuation checks below need the window to reach both valuations.
    work = max(u_order, 0) + 2 * pole + zero + 2
    num_series = _poly_at_minus_exp_iu(r.numerator, work)
    den_series = _poly_at_minus_exp_iu(r.denominator, work)
    if den_series.valuation() != pole or num_series.valuation() != zero:
        raise ArithmeticError("substitution series valuation disagrees with root multiplicity")
    quotient = (num_series * den_series.inverse()).truncate(u_order)
    for degree, c in quotient.items():
        if imag_part(c):
            raise ArithmeticError(
                f"imaginary residue {imag_part(c)}*i at u^{degree}: the input was not "
                "q <-> 1/q symmetric, or an arithmetic bug occurred"
            )
        if degree % 2 and real_part(c):
            raise ArithmeticError(
                f"odd-degree coefficient {real_part(c)} at u^{degree}: the input was not "
                "q <-> 1/q symmetric, or an arithmetic bug occurred"
            )
    return quotient.map_coefficients(real_part)


def bps_table_from_grid(grid: KkvBpsGrid, d_max: int, h: int) -> BpsTable:
    """BPS table over grades 1..d_max for multiples of a primitive class
    with square label h, populated from the KKV grid by square."""
    entries: dict[tuple[int, int], int] = {}
    squares: dict[int, int] = {}
    label = HodgeLabel(1, h)
    for grade in range(1, d_max + 1):
        hd = label.square_label(grade)
        squares[grade] = hd
        if hd < 0:
            continue
        if hd > grid.h_max:
            raise ValueError(
                f"grade {grade} needs column h = {hd}, but the grid stops at {grid.h_max}"
            )
        for g in range(hd + 1):
            value = grid.value(g, hd)
            if value:
                entries[(g, grade)] = value
    return BpsTable(entries, square_labels=squares)


@dataclass(frozen=True)
class MnopReport:
    """Outcome of one local MNOP comparison."""

    label: HodgeLabel
    equal: bool
    lhs: LaurentSeries
    rhs: LaurentSeries
    first_mismatch: tuple | None

    def __bool__(self) -> bool:
        return self.equal


def mnop_check(
    label: HodgeLabel,
    grid: KkvBpsGrid,
    u_order: int = 12,
    ledger: PairsLedger | None = None,
) -> MnopReport:
    """Compare the two sides of the local MNOP identity at one class.

    The left side runs the BPS transform on KKV data; the right side runs the
    multiple cover formula and the q = -exp(i*u) substitution.  The two
    pipelines share no series code beyond the base ring.
    """
    table = bps_table_from_grid(grid, label.d, label.h)
    lhs = gw_grade_series(table, label.d, u_order)
    rhs = substitute_q_minus_exp(multiple_cover(label, grid, ledger), u_order)
    lo = min(lhs.min_degree, rhs.min_degree)
    mismatch = None
    for degree in range(lo, u_order + 1):
        a = lhs.coefficient(degree)
        b = rhs.coefficient(degree)
        if a != b:
            mismatch = (degree, a, b)
            break
    return MnopReport(label, mismatch is None, lhs, rhs, mismatch)


def disconnected_partition(
    grid: KkvBpsGrid, h: int, d_max: int, ledger: PairsLedger | None = None
) -> GradedSeries:
    """Disconnected pairs partition function graded by class multiple.

    The graded exponential of the connected entries d -> P_{d*beta}; taking
    the graded log returns the connected ledger.
    """
    entries = {
        d: multiple_cover(HodgeLabel(d, h), grid, ledger) for d in range(1, d_max + 1)
    }
    return GradedSeries(d_max, entries).exp()
