"""Closed-form theory for points in P^1 x P^1.

The combinatorics of a configuration is carried by its partition: row counts
sorted decreasingly.  Property (*) characterizes the Cohen-Macaulay sets; for
those, resolutions, generators, point degrees, and removal behaviour all come
from the partition.  `nu_bruteforce` is the independent generator counter used
to validate the closed forms.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .betti import BettiTable
from .degrees import DegreeBox, MultiDegree
from .errors import NotACM, ShapeMismatch
from .forms import MultiForm, product_of_forms, vanishing_linear_form
from .hilbert import get_spans
from .linalg import RowSpan
from .points import Partition, PointSet, ProjPoint

P1P1_DIMS = (1, 1)


def _require_p1p1(x: PointSet) -> None:
    if x.shape.dims != P1P1_DIMS:
        raise ShapeMismatch(f"operation needs P^1 x P^1, got {x.shape.dims}")
    if not len(x):
        raise ShapeMismatch("empty point set")


def partition_of(x: PointSet) -> Partition:
    """Row sizes of the configuration, weakly decreasing."""
    _require_p1p1(x)
    counts = Counter(p.factor_key(0) for p in x.points)
    return Partition(tuple(sorted(counts.values(), reverse=True)))


def conjugate(lam: Partition) -> Partition:
    """Conjugate partition: part i counts the parts of lam that are >= i."""
    parts = tuple(
        sum(1 for l in lam.parts if l >= i) for i in range(1, lam.parts[0] + 1)
    )
    return Partition(parts)


@dataclass(frozen=True)
class StarWitness:
    """A pair violating property (*): distinct rows and columns, no mixed point."""

    first: ProjPoint
    second: ProjPoint


def star_property(x: PointSet) -> tuple[bool, StarWitness | None]:
    """Check property (*): each cross pair of points has a mixed completion."""
    _require_p1p1(x)
    members = {(p.factor_key(0), p.factor_key(1)) for p in x.points}
    pts = x.points
    for a in range(len(pts)):
        ra, ca = pts[a].factor_key(0), pts[a].factor_key(1)
        for b in range(a + 1, len(pts)):
            rb, cb = pts[b].factor_key(0), pts[b].factor_key(1)
            if ra == rb or ca == cb:
                continue
            if (ra, cb) not in members and (rb, ca) not in members:
                return False, StarWitness(pts[a], pts[b])
    return True, None


def is_acm(x: PointSet) -> bool:
    """Cohen-Macaulayness of the coordinate ring, decided by property (*)."""
    return star_property(x)[0]


@dataclass(frozen=True)
class LabeledGrid:
    """Configuration relabeled so row sizes decrease and columns sort by count.

    For a set with property (*) the membership is then a Ferrers diagram:
    cell (i, j) is occupied exactly when j < lam_i.
    """

    row_points: tuple          # factor-0 coordinate vectors, one per row
    col_points: tuple          # factor-1 coordinate vectors, one per column
    membership: frozenset      # occupied (row index, column index) cells
    lam: Partition

    @property
    def is_ferrers(self) -> bool:
        expected = {
            (i, j) for i, l in enumerate(self.lam.parts) for j in range(l)
        }
        return self.membership == expected

    def point(self, x: PointSet, i: int, j: int) -> ProjPoint:
        """The member of x sitting in cell (i, j)."""
        probe = ProjPoint([self.row_points[i], self.col_points[j]])
        return x.points[x.index_of(probe)]


def relabel(x: PointSet) -> LabeledGrid:
    """Sort rows by descending size and columns by descending count.

    Ties break by first occurrence, which fixes one canonical grid per input
    order.
    """
    _require_p1p1(x)
    row_keys: list = []
    col_keys: list = []
    for p in x.points:
        if p.factor_key(0) not in row_keys:
            row_keys.append(p.factor_key(0))
        if p.factor_key(1) not in col_keys:
            col_keys.append(p.factor_key(1))
    row_count = Counter(p.factor_key(0) for p in x.points)
    col_count = Counter(p.factor_key(1) for p in x.points)
    rows = sorted(row_keys, key=lambda k: (-row_count[k], row_keys.index(k)))
    cols = sorted(col_keys, key=lambda k: (-col_count[k], col_keys.index(k)))
    row_pos = {k: i for i, k in enumerate(rows)}
    col_pos = {k: j for j, k in enumerate(cols)}
    membership = frozenset(
        (row_pos[p.factor_key(0)], col_pos[p.factor_key(1)]) for p in x.points
    )
    # one representative coordinate vector per row/column, from the points
    row_vec = {}
    col_vec = {}
    for p in x.points:
        row_vec.setdefault(row_pos[p.factor_key(0)], p.coords[0])
        col_vec.setdefault(col_pos[p.factor_key(1)], p.coords[1])
    lam = Partition(tuple(sorted(row_count.values(), reverse=True)))
    return LabeledGrid(
        tuple(row_vec[i] for i in range(len(rows))),
        tuple(col_vec[j] for j in range(len(cols))),
        membership,
        lam,
    )


def acm_resolution(lam: Partition) -> BettiTable:
    """Length-two resolution shifts of a Ferrers configuration, from its partition.

    First syzygies sit at (r,0), (0,lam_1) and one (i-1, lam_i) per strict drop
    lam_i < lam_{i-1}; the last module holds (r, lam_r) and one (i-1, lam_{i-1})
    per drop, one fewer shift than the first.
    """
    parts = lam.parts
    r = len(parts)
    s1 = Counter({(r, 0): 1, (0, parts[0]): 1})
    s2 = Counter({(r, parts[-1]): 1})
    for i in range(1, r):  # 0-based: drop between parts[i-1] and parts[i]
        if parts[i] < parts[i - 1]:
            s1[(i, parts[i])] += 1
            s2[(i, parts[i - 1])] += 1
    return BettiTable.resolution_of_quotient({1: s1, 2: s2}, r=2)


def acm_generators(x: PointSet) -> list[MultiForm]:
    """Minimal generators of the ideal of a property-(*) configuration.

    Products of the row and column linear forms prescribed by the partition:
    the full row product, the lam_1 column product, and one mixed product per
    drop.  Each output is checked to vanish on all of X.
    """
    grid = relabel(x)
    if not grid.is_ferrers:
        raise NotACM("configuration does not satisfy property (*)")
    shape = x.shape
    row_forms = [vanishing_linear_form(shape, 0, vec) for vec in grid.row_points]
    col_forms = [vanishing_linear_form(shape, 1, vec) for vec in grid.col_points]
    parts = grid.lam.parts
    r = len(parts)
    gens = [
        product_of_forms(row_forms),
        product_of_forms(col_forms[: parts[0]]),
    ]
    for i in range(1, r):
        if parts[i] < parts[i - 1]:
            gens.append(
                product_of_forms(row_forms[:i] + col_forms[: parts[i]])
            )
    for g in gens:
        bad = [p for p in x.points if g.evaluate(p) != 0]
        if bad:
            raise AssertionError(f"generator of degree {g.degree} misses {bad[0]!r}")
    return [g.normalized() for g in gens]


def point_degree_acm(x: PointSet, p: ProjPoint) -> MultiDegree:
    """Degree of a point of a property-(*) set, by coordinate sharing counts.

    (a-1, b-1) where a points share the second coordinate and b share the
    first.
    """
    _require_p1p1(x)
    x.index_of(p)
    if not is_acm(x):
        raise NotACM("point degree formula needs property (*)")
    b = sum(1 for q in x.points if q.factor_key(0) == p.factor_key(0))
    a = sum(1 for q in x.points if q.factor_key(1) == p.factor_key(1))
    return (a - 1, b - 1)


class RemovalOutcome(enum.Enum):
    ACM_PRESERVED = "ACM_PRESERVED"
    ACM_LOST = "ACM_LOST"


def removal_classification(x: PointSet, p: ProjPoint) -> RemovalOutcome:
    """Whether removing the point keeps the configuration Cohen-Macaulay.

    Decided by the last-shift membership test and, independently, by checking
    property (*) on the smaller set; the two must agree.
    """
    alpha = point_degree_acm(x, p)  # validates membership and property (*)
    s2 = acm_resolution(partition_of(x)).multiset(2)
    by_shift = s2.get((alpha[0] + 1, alpha[1] + 1), 0) > 0
    rest = x.remove_point(p)
    by_star = True if not len(rest) else star_property(rest)[0]
    if by_shift != by_star:
        raise AssertionError(
            f"removal tests disagree at {alpha}: shift {by_shift}, star {by_star}"
        )
    return RemovalOutcome.ACM_PRESERVED if by_shift else RemovalOutcome.ACM_LOST


def removed_resolution(x: PointSet, p: ProjPoint) -> BettiTable:
    """Predicted minimal resolution shifts of X minus one point.

    Cohen-Macaulay removals rebuild the closed form from the smaller
    partition; otherwise the length-3 table appends the point's degree
    corner: top (a+1, b+1), the two mixed shifts joining the old last
    module, and (a, b) joining the old first syzygies.
    """
    outcome = removal_classification(x, p)
    if outcome is RemovalOutcome.ACM_PRESERVED:
        return acm_resolution(partition_of(x.remove_point(p)))
    a, b = point_degree_acm(x, p)
    fx = acm_resolution(partition_of(x))
    middle = fx.multiset(2)
    middle[(a + 1, b)] += 1
    middle[(a, b + 1)] += 1
    bottom = fx.multiset(1)
    bottom[(a, b)] += 1
    return BettiTable.resolution_of_quotient(
        {1: bottom, 2: middle, 3: Counter({(a + 1, b + 1): 1})}, r=2
    )


@dataclass(frozen=True)
class NuResult:
    """Minimal generator count with its per-degree breakdown."""

    total: int
    by_degree: dict

    def __int__(self) -> int:
        return self.total


def nu_bruteforce(x: PointSet, box: DegreeBox | None = None) -> NuResult:
    """Count minimal ideal generators degree by degree, by exact linear algebra.

    In each degree i the number of new generators is
        dim (I)_i - dim (R_1 . I)_i
    evaluated through the evaluation spans W_j in k^s: by rank-nullity it
    equals  sum_v H(i - e_v) - H(i) - rank K_i,  where v runs over all
    variables and K_i is spanned by the images of the Koszul relations
    x_v e_w - x_w e_v scaled by a basis of W at i - e_v - e_w.  Works for any
    shape; the box must reach past every generator degree (default (s,...,s)).
    """
    s = len(x)
    shape = x.shape
    if box is None:
        box = DegreeBox((s,) * shape.r)
    spans = get_spans(x)
    variables = [
        (k, values)
        for k, factor_vals in enumerate(spans.var_values)
        for values in factor_vals
    ]
    nvars = len(variables)
    zero = shape.zero()
    by_degree: dict[MultiDegree, int] = {}
    for i in box:
        if i == zero:
            continue
        h_here = spans.h(i)
        below = []
        for k, _ in variables:
            below.append(spans.h(tuple(c - (1 if t == k else 0) for t, c in enumerate(i))))
        target = sum(below) - h_here
        if target == 0:
            continue
        # Koszul exactness shortcut: with every graded piece in sight already
        # full (dimension s) the complex splits across the points and is exact,
        # so no generators can appear here.
        if (
            all(c >= 2 for c in i)
            and h_here == s
            and all(b == s for b in below)
            and all(
                spans.h(
                    tuple(
                        c - (1 if t == kv else 0) - (1 if t == kw else 0)
                        for t, c in enumerate(i)
                    )
                )
                == s
                for vi, (kv, _) in enumerate(variables)
                for kw, _ in (variables[w] for w in range(vi, nvars))
            )
        ):
            continue
        kspan = RowSpan(nvars * s)
        done = False
        for vi in range(nvars):
            kv, xv = variables[vi]
            for wi in range(vi + 1, nvars):
                kw, xw = variables[wi]
                dd = tuple(
                    c - (1 if t == kv else 0) - (1 if t == kw else 0)
                    for t, c in enumerate(i)
                )
                if any(c < 0 for c in dd):
                    continue
                for u in spans.basis(dd):
                    vec = [0] * (nvars * s)
                    off_w = wi * s
                    off_v = vi * s
                    for q in range(s):
                        vec[off_w + q] = xv[q] * u[q]
                        vec[off_v + q] = -(xw[q] * u[q])
                    kspan.add(vec)
                    if kspan.dim == target:
                        done = True
                        break
                if done:
                    break
            if done:
                break
        count = target - kspan.dim
        if count:
            by_degree[i] = count
    return NuResult(sum(by_degree.values()), dict(sorted(by_degree.items())))


def ferrers_ascii(x: PointSet) -> str:
    """Rows top-down, '*' for members, '.' for empty cells of the labeled grid."""
    grid = relabel(x)
    lines = []
    ncols = len(grid.col_points)
    for i in range(len(grid.row_points)):
        cells = ["*" if (i, j) in grid.membership else "." for j in range(ncols)]
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"
