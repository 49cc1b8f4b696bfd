"""Separator degrees, explicit separators, and the ideal identities they satisfy.

A separator of P in X is a multihomogeneous form that vanishes on X \\ {P} but
not at P; the degree set of P collects the minimal degrees of separators.  It
is recovered from Hilbert-function comparison of X and X \\ {P}: the degrees
where the value drops by one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .degrees import (
    DegreeBox,
    MultiDegree,
    degree_sub,
    is_antichain,
    min_elements,
    monomial_count,
)
from .errors import BoxTooSmall, DegreeNotAbove, NotASeparatorDegree
from .forms import MultiForm, linear_form
from .hilbert import (
    default_box,
    evaluation_matrix,
    get_spans,
    hilbert_value,
    removal_drop_table,
)
from .linalg import RowSpan, kernel_basis
from .points import PointSet, ProjPoint


@dataclass(frozen=True)
class DegreeSet:
    """Antichain of minimal separator degrees of one point."""

    elements: frozenset

    def __post_init__(self) -> None:
        if not is_antichain(self.elements):
            raise ValueError(f"degree set {self.elements} is not an antichain")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, degree: MultiDegree) -> bool:
        return degree in self.elements

    def sorted(self) -> list[MultiDegree]:
        return sorted(self.elements)


def degree_set(
    x: PointSet,
    p: ProjPoint,
    box: DegreeBox | None = None,
    cross_check: bool = True,
) -> DegreeSet:
    """Minimal degrees where H_X and H_{X \\ P} differ, scanned over the box.

    H of the removed set is only evaluated where H_X falls short of s (plus the
    box corner): at degrees with H_X(i) = s the drop is automatic, since
    deleting a row lowers a full rank s matrix to rank exactly s - 1.  Every
    reported degree is realized by an explicit separator (cross-checked via
    minimal_separator unless disabled).
    """
    x.index_of(p)  # raises PointNotFound
    if box is None:
        box = default_box(x)
    y = x.remove_point(p)
    sx, sy = get_spans(x), get_spans(y)
    s = len(x)
    # the dominating corner is evaluated on both sets: one removed row must
    # cost exactly one rank there whenever X imposes independent conditions
    if sx.h(box.upper) == s and sy.h(box.upper) != s - 1:
        raise AssertionError(f"span engines disagree at the corner {box.upper}")
    diff = set()
    for i in box:
        hx = sx.h(i)
        if hx == s or hx - sy.h(i) == 1:
            diff.add(i)
    if not diff:
        raise BoxTooSmall(
            f"no Hilbert difference on the box with corner {box.upper}; "
            "the search box was shrunk below the stabilization corner"
        )
    elems = min_elements(diff)
    if cross_check:
        for alpha in sorted(elems):
            minimal_separator(x, p, alpha)
    return DegreeSet(frozenset(elems))


def separator_space_dim(x: PointSet, p: ProjPoint, alpha: MultiDegree) -> int:
    """dim (I_{X \\ P})_alpha - dim (I_X)_alpha, by two honest matrix ranks."""
    x.index_of(p)
    y = x.remove_point(p)
    return hilbert_value(x, alpha) - hilbert_value(y, alpha)


def minimal_separator(x: PointSet, p: ProjPoint, alpha: MultiDegree) -> MultiForm:
    """The degree-alpha separator of P, normalized to leading coefficient 1.

    Unique up to scalar modulo I_X; the returned representative is the first
    canonical kernel vector of the removed set's evaluation matrix that does
    not vanish at P.
    """
    x.index_of(p)
    y = x.remove_point(p)
    dim_ix = monomial_count(x.shape, alpha) - get_spans(x).h(alpha)
    ker_y = kernel_basis(evaluation_matrix(y, alpha))
    if len(ker_y) - dim_ix != 1:
        raise NotASeparatorDegree(
            f"separator space at {alpha} has dimension {len(ker_y) - dim_ix}"
        )
    for vec in ker_y:
        form = MultiForm(x.shape, alpha, vec)
        if form.evaluate(p) != 0:
            return form.normalized()
    raise NotASeparatorDegree(f"every form of degree {alpha} through Y vanishes at P")


def _lift_form(x: PointSet, p: ProjPoint, factor: int) -> MultiForm:
    """Lexicographically first small-integer linear form avoiding X in the factor.

    Coefficients range over [-s, s]; a form nonvanishing at every point of the
    factor projection always exists there.  Falls back to nonvanishing at P
    alone (never needed in exact arithmetic, kept for the stated contract).
    """
    s = max(len(x), 1)
    n = x.shape.dims[factor]
    fallback = None
    for coeffs in itertools.product(range(-s, s + 1), repeat=n + 1):
        if all(c == 0 for c in coeffs):
            continue
        form = linear_form(x.shape, factor, coeffs)
        values = [form.evaluate(q) for q in x.points]
        if all(v != 0 for v in values):
            return form
        if fallback is None and form.evaluate(p) != 0:
            fallback = form
    if fallback is None:
        raise RuntimeError(f"no linear form in factor {factor} avoids the point")
    return fallback


def lift_separator(
    x: PointSet, p: ProjPoint, sep: MultiForm, degree: MultiDegree
) -> MultiForm:
    """Raise a separator to an exact target degree above its own.

    Multiplies by powers of per-factor linear forms that miss every point of X
    (so the lift still vanishes precisely on X \\ {P}).
    """
    gap = degree_sub(degree, sep.degree)
    if gap is None:
        raise DegreeNotAbove(f"{degree} is not componentwise above {sep.degree}")
    idx = x.index_of(p)
    values = [sep.evaluate(q) for q in x.points]
    if values[idx] == 0 or any(v != 0 for q, v in enumerate(values) if q != idx):
        raise ValueError("form is not a separator of the point")
    lifted = sep
    for factor, power in enumerate(gap):
        if power == 0:
            continue
        ell = _lift_form(x, p, factor)
        for _ in range(power):
            lifted = lifted * ell
    return lifted.normalized()


def verify_ideal_sum(
    x: PointSet,
    p: ProjPoint,
    seps: list[MultiForm],
    box: DegreeBox | None = None,
) -> bool:
    """Degreewise check that I_X plus the minimal separators spans I_{X \\ P}.

    In each degree i the span of (I_X)_i together with all monomial multiples
    of the separators has dimension dim(I_X)_i + rank of the multiples'
    evaluation vectors at X (rank-nullity for the evaluation map), so the
    identity reduces to comparing that rank with H_X(i) - H_Y(i).
    """
    idx = x.index_of(p)
    if box is None:
        box = default_box(x)
    y = x.remove_point(p)
    sx, sy = get_spans(x), get_spans(y)
    s = len(x)
    sep_values = []
    for f in seps:
        vals = tuple(f.evaluate(q) for q in x.points)
        if vals[idx] == 0 or any(v != 0 for q, v in enumerate(vals) if q != idx):
            raise ValueError("a supplied form is not a separator of the point")
        sep_values.append(vals)
    for i in box:
        span = RowSpan(s)
        for f, fvals in zip(seps, sep_values):
            shift = degree_sub(i, f.degree)
            if shift is None:
                continue
            mono = evaluation_matrix(x, shift)
            for col in range(mono.cols):
                vec = [mono.entries[q * mono.cols + col] * fvals[q] for q in range(s)]
                span.add(vec)
                if span.dim == s:
                    break
            if span.dim == s:
                break
        if sx.h(i) - sy.h(i) != span.dim:
            return False
    return True


def verify_colon(
    x: PointSet, p: ProjPoint, sep: MultiForm, box: DegreeBox | None = None
) -> bool:
    """Degreewise check that forms G with G*sep in I_X are exactly the ideal of P.

    Per degree both the dimension ({G : G*F on X = 0} has codimension 1, like
    I_P) and the containment (every generator of (I_P)_i times F vanishes on
    X) are verified.
    """
    idx = x.index_of(p)
    if box is None:
        box = default_box(x)
    values = [sep.evaluate(q) for q in x.points]
    if values[idx] == 0 or any(v != 0 for q, v in enumerate(values) if q != idx):
        raise ValueError("form is not a separator of the point")
    spans = get_spans(x)
    for i in box:
        # codimension of the colon piece: rank of the F-scaled evaluation map
        scaled = RowSpan(len(x))
        for b in spans.basis(i):
            scaled.add([v * c for v, c in zip(values, b)])
        if scaled.dim != 1:
            return False
        # containment (I_P)_i . F subset of I_X, on the canonical basis of (I_P)_i
        mono = evaluation_matrix(x, i)
        for g in kernel_basis(evaluation_matrix(PointSet(x.shape, [p]), i)):
            support = [(c, coeff) for c, coeff in enumerate(g) if coeff]
            for q in range(len(x)):
                if values[q] == 0:
                    continue
                gval = sum(coeff * mono.entries[q * mono.cols + c] for c, coeff in support)
                if gval * values[q] != 0:
                    return False
    return True


def box_stability_check(
    x: PointSet, p: ProjPoint, box: DegreeBox | None = None
) -> bool:
    """True when doubling the search box leaves the degree set unchanged."""
    if box is None:
        box = default_box(x)
    first = degree_set(x, p, box, cross_check=False)
    second = degree_set(x, p, box.doubled(), cross_check=False)
    return first.elements == second.elements


def all_degree_sets(x: PointSet, box: DegreeBox | None = None) -> list[DegreeSet]:
    """Degree sets of every point at once, from one left-kernel sweep per degree.

    Batch counterpart of degree_set (same Hilbert-drop definition, same box),
    returned in the point order of X.
    """
    if box is None:
        box = default_box(x)
    drops = removal_drop_table(x, box)
    out = []
    for q in range(len(x)):
        mins = min_elements({i for i, flags in drops.items() if flags[q]})
        out.append(DegreeSet(frozenset(mins)))
    return out
