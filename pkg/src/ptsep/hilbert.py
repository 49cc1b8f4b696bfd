"""Evaluation matrices and multigraded Hilbert functions on degree boxes.

Two routes compute the same numbers.  `hilbert_value` is the blunt one: build
the s x dim(R_i) evaluation matrix and take its rank.  `hilbert_table` walks a
box through `EvalSpans`, which tracks the span of the monomial value vectors
inside k^s via the column recurrence

    columns(M_i)  =  union over variables x of factor k of  x * columns(M_{i-e_k})

valid for any factor k with i_k > 0, so each degree costs one small incremental
elimination instead of a fresh matrix.  Both routes are exact; their agreement
is pinned by tests.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .degrees import DegreeBox, MultiDegree, factor_basis, monomial_count
from .errors import ShapeMismatch
from .linalg import DenseMatrix, RowSpan, kernel_basis, rank
from .points import PointSet


def _factor_values(x: PointSet, k: int, d: int) -> list[tuple[int, ...]]:
    """Per point, the values of the degree-d monomials of factor k (basis order)."""
    cache = x._span_cache
    key = ("fv", k, d)
    if key in cache:
        return cache[key]
    exps = factor_basis(x.shape.dims[k], d)
    rows = []
    for p in x.points:
        coords = p.eval_coords[k]
        vals = []
        for e in exps:
            v = 1
            for c, a in zip(coords, e):
                if a:
                    v *= c**a
            vals.append(v)
        rows.append(tuple(vals))
    cache[key] = rows
    return rows


def evaluation_matrix(x: PointSet, degree: MultiDegree) -> DenseMatrix:
    """s x dim(R_i) matrix of monomial values at the points' chosen coordinates."""
    if len(degree) != x.shape.r:
        raise ShapeMismatch(
            f"degree {degree} does not match shape rank {x.shape.r}"
        )
    per_factor = [_factor_values(x, k, d) for k, d in enumerate(degree)]
    entries = []
    for idx in range(len(x)):
        factor_vals = [pf[idx] for pf in per_factor]
        for combo in itertools.product(*factor_vals):
            v = 1
            for c in combo:
                v *= c
            entries.append(v)
    return DenseMatrix(len(x), monomial_count(x.shape, degree), tuple(entries))


def hilbert_value(x: PointSet, degree: MultiDegree) -> int:
    """H_X(i) as the rank of the evaluation matrix."""
    return rank(evaluation_matrix(x, degree))


class EvalSpans:
    """Lazy table of the evaluation column spans W_i inside k^s."""

    def __init__(self, x: PointSet):
        self.x = x
        self.s = len(x)
        # variable value vectors across points, one per homogeneous coordinate
        self.var_values: list[list[tuple[int, ...]]] = [
            [tuple(p.eval_coords[k][l] for p in x.points) for l in range(n + 1)]
            for k, n in enumerate(x.shape.dims)
        ]
        self._spans: dict[MultiDegree, RowSpan] = {}

    def span(self, degree: MultiDegree) -> RowSpan:
        got = self._spans.get(degree)
        if got is not None:
            return got
        # resolve iteratively along the first nonzero coordinate to keep the
        # recursion shallow on long thin boxes
        stack = [degree]
        while stack:
            d = stack[-1]
            if d in self._spans:
                stack.pop()
                continue
            if all(c == 0 for c in d):
                sp = RowSpan(self.s)
                sp.add([1] * self.s)
                self._spans[d] = sp
                stack.pop()
                continue
            k = next(t for t, c in enumerate(d) if c > 0)
            prev_deg = tuple(c - 1 if t == k else c for t, c in enumerate(d))
            prev = self._spans.get(prev_deg)
            if prev is None:
                stack.append(prev_deg)
                continue
            sp = RowSpan(self.s)
            for scale in self.var_values[k]:
                for row in prev.basis():
                    sp.add([a * b for a, b in zip(scale, row)])
                    if sp.dim == self.s:
                        break
                if sp.dim == self.s:
                    break
            self._spans[d] = sp
            stack.pop()
        return self._spans[degree]

    def h(self, degree: MultiDegree) -> int:
        """H_X at the degree; 0 when any component is negative."""
        if any(c < 0 for c in degree):
            return 0
        return self.span(degree).dim

    def basis(self, degree: MultiDegree) -> list[list[int]]:
        return self.span(degree).basis()


def get_spans(x: PointSet) -> EvalSpans:
    """The point set's cached span table."""
    cache = x._span_cache
    if "spans" not in cache:
        cache["spans"] = EvalSpans(x)
    return cache["spans"]


@dataclass(frozen=True, eq=False)
class HilbertTable:
    """Hilbert function values on every degree of a box."""

    box: DegreeBox
    values: dict

    def __getitem__(self, degree: MultiDegree) -> int:
        return self.values[degree]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HilbertTable)
            and self.box == other.box
            and self.values == other.values
        )

    def text(self) -> str:
        """Aligned grid for r = 2 (rows = first degree), flat list otherwise."""
        if len(self.box.upper) == 2:
            a, b = self.box.upper
            width = max(len(str(v)) for v in self.values.values())
            lines = []
            for i in range(a + 1):
                lines.append(
                    " ".join(str(self.values[(i, j)]).rjust(width) for j in range(b + 1))
                )
            return "\n".join(lines) + "\n"
        return (
            "\n".join(
                f"{','.join(map(str, d))}: {self.values[d]}" for d in self.box
            )
            + "\n"
        )

    def json(self) -> str:
        payload = {
            "box": list(self.box.upper),
            "values": [[list(d), self.values[d]] for d in self.box],
        }
        return json.dumps(payload, indent=2) + "\n"


def hilbert_table(x: PointSet, box: DegreeBox) -> HilbertTable:
    """Tabulate H_X over the box (deterministic, lexicographic fill)."""
    spans = get_spans(x)
    return HilbertTable(box, {i: spans.h(i) for i in box})


@dataclass(frozen=True)
class GradedPiece:
    """Basis of (I_X)_i as coefficient vectors over the monomial basis."""

    degree: MultiDegree
    basis: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.basis)


def ideal_piece(x: PointSet, degree: MultiDegree) -> GradedPiece:
    """Kernel of the evaluation matrix: all degree-i forms vanishing on X."""
    return GradedPiece(degree, tuple(kernel_basis(evaluation_matrix(x, degree))))


def default_box(x: PointSet) -> DegreeBox:
    """The (s-1, ..., s-1) corner box; H_X has stabilized at s from there on."""
    s = max(len(x), 1)
    return DegreeBox((s - 1,) * x.shape.r)


def kpoly_check(x: PointSet, betti, box: DegreeBox) -> bool:
    """Cross-validate a length-<=3 bigraded Betti table against H_X on a box.

    Checks, degree by degree, that the alternating sum of shifted free-module
    dimensions reproduces the Hilbert function:
        H_X(i,j) = sum_h (-1)^h sum_{(a,b) in shifts_h} mult * (i-a+1)(j-b+1).
    """
    if x.shape.dims != (1, 1):
        raise ShapeMismatch("K-polynomial check is specific to P^1 x P^1")
    spans = get_spans(x)
    for i, j in box:
        total = 0
        sign = 1
        for h in range(betti.length + 1):
            shifts: Counter = betti.shifts.get(h, Counter())
            contrib = 0
            for (a, b), mult in shifts.items():
                if a <= i and b <= j:
                    contrib += mult * (i - a + 1) * (j - b + 1)
            total += sign * contrib
            sign = -sign
        if total != spans.h((i, j)):
            return False
    return True


def removal_drop_table(x: PointSet, box: DegreeBox) -> dict[MultiDegree, tuple[bool, ...]]:
    """For every degree i of the box and every point p, whether H drops on removal.

    Entry [i][p] is True exactly when H_{X \\ p}(i) = H_X(i) - 1.  Removing row
    p drops the rank of the evaluation matrix iff no row dependency involves p,
    i.e. iff p lies outside the support of the left kernel, so one left-kernel
    elimination per degree answers the question for all points at once.
    """
    spans = get_spans(x)
    s = len(x)
    out = {}
    for i in box:
        basis = spans.basis(i)
        if spans.h(i) == s:
            # full rank: every row is essential
            out[i] = (True,) * s
            continue
        # left kernel of the evaluation matrix = orthogonal complement of W_i
        kernel = kernel_basis(DenseMatrix.from_rows(basis))
        support = set()
        for vec in kernel:
            support.update(p for p, c in enumerate(vec) if c != 0)
        out[i] = tuple(p not in support for p in range(s))
    return out
