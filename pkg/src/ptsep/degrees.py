"""Multidegrees, the componentwise partial order, and monomial enumeration.

A multidegree is a plain tuple of non-negative ints.  The partial order is
componentwise: ``a <= b`` iff every component of ``a`` is at most the matching
component of ``b``.  Monomials are flat exponent tuples over all homogeneous
coordinates, factor blocks concatenated in index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .errors import LengthMismatch

MultiDegree = tuple[int, ...]


@dataclass(frozen=True)
class SpaceShape:
    """Ambient product P^{n_1} x ... x P^{n_r}, stored as the tuple (n_1,...,n_r)."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.dims) < 1 or any(n < 1 for n in self.dims):
            raise ValueError(f"invalid shape dims {self.dims}")

    @property
    def r(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        """Sum of the factor dimensions (length of a point's Koszul resolution)."""
        return sum(self.dims)

    @property
    def num_vars(self) -> int:
        return sum(n + 1 for n in self.dims)

    def block_offsets(self) -> tuple[int, ...]:
        """Start index of each factor's variables inside a flat exponent tuple."""
        offs = [0]
        for n in self.dims[:-1]:
            offs.append(offs[-1] + n + 1)
        return tuple(offs)

    def zero(self) -> MultiDegree:
        return (0,) * self.r

    def unit(self, k: int) -> MultiDegree:
        return tuple(1 if t == k else 0 for t in range(self.r))


def leq(a: MultiDegree, b: MultiDegree) -> bool:
    """Componentwise comparison a <= b."""
    if len(a) != len(b):
        raise LengthMismatch(f"degree lengths differ: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def lt(a: MultiDegree, b: MultiDegree) -> bool:
    """Strict componentwise order: a <= b and a != b."""
    return a != b and leq(a, b)


def degree_sub(a: MultiDegree, b: MultiDegree) -> MultiDegree | None:
    """a - b componentwise, or None if any component would go negative."""
    if len(a) != len(b):
        raise LengthMismatch(f"degree lengths differ: {len(a)} vs {len(b)}")
    out = tuple(x - y for x, y in zip(a, b))
    return None if any(c < 0 for c in out) else out


def degree_add(a: MultiDegree, b: MultiDegree) -> MultiDegree:
    if len(a) != len(b):
        raise LengthMismatch(f"degree lengths differ: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def min_elements(degrees: Iterable[MultiDegree]) -> set[MultiDegree]:
    """Minimal elements of a finite set under the componentwise order (an antichain)."""
    pool = set(degrees)
    return {a for a in pool if not any(lt(b, a) for b in pool)}


def in_upset(i: MultiDegree, generators: Iterable[MultiDegree]) -> bool:
    """True iff i dominates some element of the generating set."""
    return any(leq(a, i) for a in generators)


def is_antichain(degrees: Iterable[MultiDegree]) -> bool:
    pool = list(degrees)
    return not any(lt(a, b) for a in pool for b in pool)


@dataclass(frozen=True)
class DegreeBox:
    """Finite downward-closed region {i : i <= upper}."""

    upper: MultiDegree

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.upper):
            raise ValueError(f"box corner must be non-negative, got {self.upper}")

    def __iter__(self) -> Iterator[MultiDegree]:
        """All degrees of the box in lexicographic order (a linear extension of <=)."""
        return itertools.product(*(range(c + 1) for c in self.upper))

    def __contains__(self, i: MultiDegree) -> bool:
        return len(i) == len(self.upper) and leq(i, self.upper)

    def __len__(self) -> int:
        n = 1
        for c in self.upper:
            n *= c + 1
        return n

    def doubled(self) -> "DegreeBox":
        return DegreeBox(tuple(2 * c for c in self.upper))


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """All tuples of `parts` non-negative ints summing to `total`, ascending lex."""
    if parts == 1:
        return ((total,),)
    return tuple(
        (head,) + tail
        for head in range(total + 1)
        for tail in compositions(total - head, parts - 1)
    )


def factor_basis(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the degree-d monomials in n+1 variables, ascending lex."""
    return compositions(d, n + 1)


@lru_cache(maxsize=None)
def monomial_basis(shape: SpaceShape, degree: MultiDegree) -> tuple[tuple[int, ...], ...]:
    """Flat exponent tuples of all monomials of the given multidegree.

    Ordered lexicographically within each factor and by factor index across
    factors (first factor most significant).  Size is the product of the
    binomials C(n_k + i_k, n_k).
    """
    if len(degree) != shape.r:
        raise LengthMismatch(
            f"degree length {len(degree)} does not match shape rank {shape.r}"
        )
    blocks = [factor_basis(n, d) for n, d in zip(shape.dims, degree)]
    return tuple(sum(combo, ()) for combo in itertools.product(*blocks))


def monomial_count(shape: SpaceShape, degree: MultiDegree) -> int:
    """dim R_i, the number of monomials of multidegree i."""
    out = 1
    for n, d in zip(shape.dims, degree):
        out *= comb(n + d, n)
    return out


def parse_degree(text: str, r: int | None = None) -> MultiDegree:
    """Parse 'a,b,...' into a multidegree, optionally checking its length."""
    parts = tuple(int(p) for p in text.split(","))
    if any(c < 0 for c in parts):
        raise ValueError(f"negative degree component in {text!r}")
    if r is not None and len(parts) != r:
        raise LengthMismatch(f"expected {r} components, got {len(parts)}")
    return parts
