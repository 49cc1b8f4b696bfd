"""Betti-table bookkeeping: Koszul tables, mapping cones, cancellation.

Tables store, per homological index, a multiset of multidegree shifts (a shift
may repeat).  The module never decides minimality; it only assembles and
cancels, leaving minimality claims to closed forms or brute-force generator
counts.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from math import comb

from .degrees import MultiDegree, SpaceShape, degree_add
from .errors import LengthMismatch, NotCancellable


class BettiTable:
    """Shifts of a free complex: homological index -> multiset of multidegrees."""

    def __init__(self, shifts: dict[int, Counter]):
        cleaned = {}
        for idx, mult in shifts.items():
            items = Counter(mult).items()
            if any(m < 0 for _, m in items):
                raise ValueError(f"negative multiplicity at index {idx}")
            counter = Counter({tuple(shift): m for shift, m in items if m})
            if counter:
                cleaned[idx] = counter
        if not cleaned:
            raise ValueError("empty Betti table")
        self.shifts: dict[int, Counter] = cleaned
        self.length: int = max(cleaned)

    @classmethod
    def resolution_of_quotient(cls, shifts: dict[int, Counter], r: int) -> "BettiTable":
        """A table for R/I: index 0 carries the single shift (0,...,0)."""
        full = {0: Counter({(0,) * r: 1})}
        full.update(shifts)
        return cls(full)

    def multiset(self, index: int) -> Counter:
        return Counter(self.shifts.get(index, Counter()))

    def total(self, index: int) -> int:
        return sum(self.shifts.get(index, Counter()).values())

    def copy(self) -> "BettiTable":
        return BettiTable({i: Counter(c) for i, c in self.shifts.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.shifts == other.shifts

    def __repr__(self) -> str:
        return f"BettiTable(length={self.length})"

    def text(self) -> str:
        lines = []
        for idx in range(self.length + 1):
            entries = sorted(self.shifts.get(idx, Counter()).items())
            body = " ".join(
                f"({','.join(map(str, shift))})" + (f"^{m}" if m > 1 else "")
                for shift, m in entries
            )
            lines.append(f"{idx}: {body}" if body else f"{idx}:")
        return "\n".join(lines) + "\n"

    def json(self) -> str:
        payload = {
            str(idx): [[list(shift), m] for shift, m in sorted(counter.items())]
            for idx, counter in sorted(self.shifts.items())
        }
        return json.dumps(payload, indent=2) + "\n"


def koszul_point_table(shape: SpaceShape) -> BettiTable:
    """Multigraded Koszul resolution of one point of the product space.

    Homological index j carries each shift (a_1,...,a_r) with sum j and
    a_k <= n_k, with multiplicity prod_k C(n_k, a_k); the top index
    t = sum n_k holds exactly (n_1,...,n_r).
    """
    shifts: dict[int, Counter] = {}
    for combo in itertools.product(*(range(n + 1) for n in shape.dims)):
        j = sum(combo)
        mult = 1
        for n, a in zip(shape.dims, combo):
            mult *= comb(n, a)
        shifts.setdefault(j, Counter())[combo] += mult
    return BettiTable(shifts)


def mapping_cone_table(fx: BettiTable, alpha: MultiDegree, shape: SpaceShape) -> BettiTable:
    """Cone of (point resolution shifted by alpha) -> (resolution of R/I_X).

    Requires fx to have length t = sum n_k.  The result has length t+1 with
    top shift alpha + (n_1,...,n_r) and index j equal to fx_j plus the
    alpha-shifted Koszul index j-1 (so index 1 gains R(-alpha)).
    """
    t = shape.total
    if fx.length != t:
        raise LengthMismatch(
            f"resolution has length {fx.length}, mapping cone needs {t}"
        )
    koszul = koszul_point_table(shape)
    shifts: dict[int, Counter] = {0: Counter({(0,) * shape.r: 1})}
    for j in range(1, t + 2):
        counter = Counter(fx.shifts.get(j, Counter()))
        for shift, mult in koszul.shifts.get(j - 1, Counter()).items():
            counter[degree_add(shift, alpha)] += mult
        shifts[j] = counter
    return BettiTable(shifts)


def last_shift_criterion(fx: BettiTable, alpha: MultiDegree, shape: SpaceShape) -> bool:
    """Whether alpha + (n_1,...,n_r) occurs among the last module's shifts.

    False certifies that removing the point breaks the Cohen-Macaulay property;
    True is necessary but not sufficient in general, and exactly sufficient in
    P^1 x P^1.
    """
    t = shape.total
    if fx.length != t:
        raise LengthMismatch(
            f"resolution has length {fx.length}, criterion needs {t}"
        )
    target = degree_add(alpha, shape.dims)
    return fx.shifts.get(t, Counter()).get(target, 0) > 0


def cancel(table: BettiTable, index: int, shift: MultiDegree) -> BettiTable:
    """Remove one trivial pair: the shift once at `index` and once at `index-1`."""
    shift = tuple(shift)
    have_top = table.shifts.get(index, Counter()).get(shift, 0)
    have_below = table.shifts.get(index - 1, Counter()).get(shift, 0)
    if index < 1 or not have_top or not have_below:
        raise NotCancellable(
            f"no ({','.join(map(str, shift))}) pair at indices {index - 1}, {index}"
        )
    out = table.copy()
    for idx in (index, index - 1):
        out.shifts[idx][shift] -= 1
        if not out.shifts[idx][shift]:
            del out.shifts[idx][shift]
        if not out.shifts[idx]:
            del out.shifts[idx]
    out.length = max(out.shifts)
    return out
