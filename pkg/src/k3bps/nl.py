"""Noether-Lefschetz correspondences as exact linear systems.

A K3-fibred threefold expresses each fibre-class invariant as a fixed
rational linear combination of K3 invariants indexed by (divisibility m,
square label h); the combination is the same on the Gromov-Witten and the
stable-pairs side.  With synthetic (caller-supplied) coefficient matrices the
correspondence is plain exact linear algebra: combine is the matrix-vector
product, and when the matrix is invertible over the rationals the K3 data can
be recovered and the MNOP identity transferred label by label.

Real Noether-Lefschetz intersection numbers are out of scope here; matrices
are demonstration data with the right shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping, Sequence

from .bps import gw_grade_series
from .kkv import KkvBpsGrid
from .pairs import (
    HodgeLabel,
    PairsLedger,
    bps_table_from_grid,
    multiple_cover,
    substitute_q_minus_exp,
)
from .scalars import as_fraction
from .series import LaurentSeries


@dataclass(frozen=True, order=True)
class ClassLabel:
    """A K3 curve class keyed by divisibility m and square label h (square 2h-2)."""

    m: int
    h: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("divisibility m must be >= 1")

    def hodge_label(self) -> HodgeLabel:
        """Split off the primitive part: requires m**2 to divide h - 1."""
        if (self.h - 1) % (self.m * self.m):
            raise ValueError(
                f"no primitive class exists under (m={self.m}, h={self.h}): "
                "m^2 must divide h - 1"
            )
        return HodgeLabel(self.m, (self.h - 1) // (self.m * self.m) + 1)


class SingularMatrixError(ValueError):
    """Raised when a correspondence matrix cannot be inverted; carries the rank."""

    def __init__(self, rank: int, size: int) -> None:
        super().__init__(f"matrix is singular: rank {rank} < size {size}")
        self.rank = rank
        self.size = size


class NlMatrix:
    """Rational matrix of synthetic Noether-Lefschetz coefficients.

    Rows carry fibre-class labels (any hashable tags); columns carry
    :class:`ClassLabel` entries.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: Sequence, cols: Sequence[ClassLabel], data: Sequence[Sequence]) -> None:
        rows = tuple(rows)
        cols = tuple(cols)
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("row and column labels must be distinct")
        grid = tuple(tuple(as_fraction(v) for v in row) for row in data)
        if len(grid) != len(rows) or any(len(row) != len(cols) for row in grid):
            raise ValueError("data shape does not match the labels")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", grid)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("NlMatrix is immutable")

    @classmethod
    def identity(cls, labels: Sequence[ClassLabel]) -> "NlMatrix":
        labels = tuple(labels)
        data = [
            [Fraction(1) if i == j else Fraction(0) for j in range(len(labels))]
            for i in range(len(labels))
        ]
        return cls(labels, labels, data)

    @classmethod
    def upper_triangular_unit(
        cls, rows: Sequence, cols: Sequence[ClassLabel], rng: Random, bound: int = 5
    ) -> "NlMatrix":
        """Unit upper-triangular with random integer entries above the diagonal."""
        rows = tuple(rows)
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("need a square shape")
        n = len(rows)
        data = [
            [
                Fraction(1)
                if i == j
                else (Fraction(rng.randint(-bound, bound)) if j > i else Fraction(0))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return cls(rows, cols, data)

    @classmethod
    def random_invertible(
        cls, rows: Sequence, cols: Sequence[ClassLabel], rng: Random, bound: int = 5
    ) -> "NlMatrix":
        """Dense random integer matrix, redrawn until invertible."""
        rows = tuple(rows)
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("need a square shape")
        n = len(rows)
        while True:
            data = [
                [Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)
            ]
            candidate = cls(rows, cols, data)
            try:
                candidate.inverse_data()
            except SingularMatrixError:
                continue
            return candidate

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def entry(self, row, col: ClassLabel) -> Fraction:
        return self.data[self.rows.index(row)][self.cols.index(col)]

    def inverse_data(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact inverse by Gaussian elimination; raises with the rank if singular."""
        if not self.is_square:
            raise SingularMatrixError(min(len(self.rows), len(self.cols)), len(self.rows))
        n = len(self.rows)
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.data)]
        rank = 0
        for col in range(n):
            pivot = next((r for r in range(rank, n) if work[r][col]), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            inv = 1 / work[rank][col]
            work[rank] = [v * inv for v in work[rank]]
            for r in range(n):
                if r != rank and work[r][col]:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
            rank += 1
        if rank < n:
            raise SingularMatrixError(rank, n)
        return tuple(tuple(row[n:]) for row in work)

    def __repr__(self) -> str:
        return f"NlMatrix({len(self.rows)}x{len(self.cols)})"


class InvariantVector:
    """Values (u-series or pairs rational functions) indexed by labels."""

    __slots__ = ("labels", "values")

    def __init__(self, values: Mapping) -> None:
        object.__setattr__(self, "labels", tuple(values))
        object.__setattr__(self, "values", dict(values))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("InvariantVector is immutable")

    def value(self, label):
        return self.values[label]

    def replace(self, label, value) -> "InvariantVector":
        if label not in self.values:
            raise KeyError(label)
        out = dict(self.values)
        out[label] = value
        return InvariantVector(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantVector):
            return NotImplemented
        return self.values == other.values

    def __repr__(self) -> str:
        return f"InvariantVector({list(self.labels)!r})"


def _weighted_sum(weights: Iterable[tuple[Fraction, object]], example):
    total = None
    for weight, value in weights:
        if not weight:
            continue
        term = value * weight
        total = term if total is None else total + term
    if total is None:
        return example * Fraction(0)
    return total


def combine(k3: InvariantVector, nl: NlMatrix) -> InvariantVector:
    """Fibre-class invariants as the NL-weighted sums of K3 invariants."""
    if set(k3.labels) != set(nl.cols):
        raise ValueError("vector labels do not match the matrix columns")
    example = k3.value(nl.cols[0])
    out = {}
    for i, row in enumerate(nl.rows):
        out[row] = _weighted_sum(
            ((nl.data[i][j], k3.value(col)) for j, col in enumerate(nl.cols)), example
        )
    return InvariantVector(out)


def invert_correspondence(fib: InvariantVector, nl: NlMatrix) -> InvariantVector:
    """Recover the K3 vector from fibre-class data: the unique solution of
    combine(result, nl) == fib for an invertible matrix."""
    if set(fib.labels) != set(nl.rows):
        raise ValueError("vector labels do not match the matrix rows")
    inverse = nl.inverse_data()
    example = fib.value(nl.rows[0])
    out = {}
    for j, col in enumerate(nl.cols):
        out[col] = _weighted_sum(
            ((inverse[j][i], fib.value(row)) for i, row in enumerate(nl.rows)), example
        )
    return InvariantVector(out)


def synthetic_k3_vectors(
    labels: Sequence[ClassLabel],
    grid: KkvBpsGrid,
    u_order: int,
    ledger: PairsLedger | None = None,
) -> tuple[InvariantVector, InvariantVector]:
    """Consistent (GW u-series, pairs rational function) vectors from KKV data."""
    gw_values = {}
    pairs_values = {}
    for label in labels:
        hodge = label.hodge_label()
        table = bps_table_from_grid(grid, hodge.d, hodge.h)
        gw_values[label] = gw_grade_series(table, hodge.d, u_order)
        pairs_values[label] = multiple_cover(hodge, grid, ledger)
    return InvariantVector(gw_values), InvariantVector(pairs_values)


@dataclass(frozen=True)
class TransferReport:
    """Label-by-label outcome of transferring the MNOP identity through a fibration."""

    ok: bool
    failures: tuple

    def __bool__(self) -> bool:
        return self.ok


def transfer_mnop(
    fib_gw: InvariantVector,
    fib_pairs: InvariantVector,
    nl: NlMatrix,
    u_order: int,
) -> TransferReport:
    """Invert both fibre-class vectors and compare the recovered K3 data.

    For each column label the recovered GW u-series must equal the
    q = -exp(i*u) expansion of the recovered pairs function.  A recovered
    pairs entry that is not even q <-> 1/q symmetric counts as a failure at
    that label.
    """
    k3_gw = invert_correspondence(fib_gw, nl)
    k3_pairs = invert_correspondence(fib_pairs, nl)
    failures = []
    for label in nl.cols:
        lhs = k3_gw.value(label)
        entry = k3_pairs.value(label)
        if getattr(entry, "is_zero", False):
            rhs = LaurentSeries.zero("u", u_order)
        else:
            try:
                rhs = substitute_q_minus_exp(entry, u_order)
            except ArithmeticError as err:
                failures.append((label, "substitution failed", str(err)))
                continue
        lo = min(lhs.min_degree, rhs.min_degree)
        for degree in range(lo, u_order + 1):
            a = lhs.coefficient(degree)
            b = rhs.coefficient(degree)
            if a != b:
                failures.append((label, degree, a, b))
                break
    return TransferReport(not failures, tuple(failures))
