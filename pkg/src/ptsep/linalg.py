"""Deterministic exact linear algebra over the rationals.

Everything reduces to integer-preserving Gaussian elimination: rows are scaled
to integers, eliminated fraction-free, and divided by their content after each
combination step, so no rounding ever occurs and coefficient growth stays
controlled.  There is no floating-point code path anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import LengthMismatch

Scalar = Fraction  # canonical reduced form with positive denominator
Vector = Sequence  # of int | Fraction


@dataclass(frozen=True)
class DenseMatrix:
    """Dense row-major matrix with exact rational (or integer) entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise LengthMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "DenseMatrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise LengthMismatch("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix.from_rows(
            [tuple(self.entries[i * self.cols + j] for i in range(self.rows))
             for j in range(self.cols)]
        )


def _int_row(vec: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (sign preserved)."""
    denoms = [x.denominator for x in vec if isinstance(x, Fraction)]
    mult = lcm(*denoms) if denoms else 1
    row = [int(x * mult) if isinstance(x, Fraction) else x * mult for x in vec]
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        row = [x // g for x in row]
    return row


class RowSpan:
    """Incrementally built row space, kept as a reduced integer echelon.

    Rows are primitive integer vectors indexed by pivot column; insertion
    eliminates the candidate against the current echelon fraction-free.
    Deterministic for a fixed insertion order.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: dict[int, list[int]] = {}  # pivot column -> row

    @property
    def dim(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        if len(vec) != self.width:
            raise LengthMismatch(f"vector length {len(vec)} != width {self.width}")
        row = _int_row(vec)
        reduced = self._reduce(row)
        if reduced is None:
            return False
        pivot = next(c for c, x in enumerate(reduced) if x)
        if reduced[pivot] < 0:
            reduced = [-x for x in reduced]
        self._rows[pivot] = reduced
        return True

    def contains(self, vec: Sequence) -> bool:
        return self._reduce(_int_row(vec)) is None

    def basis(self) -> list[list[int]]:
        """Echelon rows ordered by pivot column."""
        return [self._rows[c] for c in sorted(self._rows)]

    def _reduce(self, row: list[int]) -> list[int] | None:
        rows = self._rows
        width = self.width
        c = 0
        while c < width:
            x = row[c]
            if x == 0:
                c += 1
                continue
            piv = rows.get(c)
            if piv is None:
                g = 0
                for v in row:
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = [v // g for v in row]
                return row
            p = piv[c]
            g = gcd(p, x)
            a, b = p // g, x // g
            row = [a * rv - b * pv for rv, pv in zip(row, piv)]
            g = 0
            for v in row:
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = [v // g for v in row]
            c += 1
        return None


def rank(m: DenseMatrix) -> int:
    """Rank over the rationals; deterministic, exact."""
    if m.rows == 0 or m.cols == 0:
        return 0
    span = RowSpan(m.cols)
    for i in range(m.rows):
        span.add(m.row(i))
    return span.dim


def span_dim(vectors: Iterable[Sequence]) -> int:
    """Dimension of the linear span of equal-length vectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    width = len(vectors[0])
    if any(len(v) != width for v in vectors):
        raise LengthMismatch("vectors of unequal length")
    span = RowSpan(width)
    for v in vectors:
        span.add(v)
    return span.dim


def rref(m: DenseMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns).

    Forward pass is integer-preserving; divisions happen only in the final
    normalization, so the result is exact and canonical.
    """
    span = RowSpan(m.cols)
    for i in range(m.rows):
        span.add(m.row(i))
    rows = [list(r) for r in span.basis()]
    pivots = sorted(span._rows)
    # eliminate above the pivots, bottom-up, still over the integers
    for idx in range(len(rows) - 1, -1, -1):
        c = pivots[idx]
        p = rows[idx][c]
        for upper in range(idx):
            x = rows[upper][c]
            if x == 0:
                continue
            g = gcd(p, x)
            a, b = p // g, x // g
            combined = [a * rv - b * pv for rv, pv in zip(rows[upper], rows[idx])]
            cg = 0
            for v in combined:
                cg = gcd(cg, v)
                if cg == 1:
                    break
            rows[upper] = [v // cg for v in combined] if cg > 1 else combined
    out = []
    for idx, r in enumerate(rows):
        p = r[pivots[idx]]
        out.append([Fraction(x, p) for x in r])
    return out, pivots


def kernel_basis(m: DenseMatrix) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the right null space, ordered by free column.

    Each basis vector has a 1 in its own free column and its remaining support
    on the pivot columns of the reduced echelon form, so the output is
    reproducible and m . v = 0 holds exactly for every returned v.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        rows: list[list[Fraction]] = []
        pivots: list[int] = []
    else:
        rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for idx, c in enumerate(pivots):
            vec[c] = -rows[idx][free]
        basis.append(tuple(vec))
    return basis


def left_kernel_basis(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of {c : sum_i c_i . rows_i = 0}, via an augmented elimination."""
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    span = RowSpan(width + n)
    for i, r in enumerate(rows):
        aug = list(r) + [0] * n
        aug[width + i] = 1
        span.add(aug)  # never a zero row: the tracking part carries a 1
    # dependencies are the echelon rows whose matrix part vanished
    kernel = []
    for row in span.basis():
        if all(x == 0 for x in row[:width]):
            kernel.append(tuple(Fraction(x) for x in row[width:]))
    return kernel
