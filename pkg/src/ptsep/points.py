"""Point sets in a product of projective spaces: model, parsing, constructors.

Coordinates are exact rationals.  Projective equality is proportionality of
the factor vectors, decided exactly by comparing canonical representatives
(first nonzero coordinate scaled to 1), which also makes points hashable.
Polynomial evaluation uses a primitive-integer representative per factor so
all downstream elimination stays over the integers.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .degrees import SpaceShape
from .errors import (
    DuplicatePoint,
    InsufficientCoordinates,
    ParseError,
    PointNotFound,
    ShapeMismatch,
    ZeroVector,
)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ParseError(f"not an exact rational: {x!r}")


def _primitive_int(vec: Sequence[Fraction]) -> tuple[int, ...]:
    mult = lcm(*(x.denominator for x in vec))
    row = [int(x * mult) for x in vec]
    g = 0
    for x in row:
        g = gcd(g, x)
    row = [x // g for x in row]
    lead = next(x for x in row if x)
    if lead < 0:
        row = [-x for x in row]
    return tuple(row)


class ProjPoint:
    """A point of P^{n_1} x ... x P^{n_r} with one coordinate vector per factor."""

    __slots__ = ("coords", "eval_coords", "_key")

    def __init__(self, coords: Sequence[Sequence]):
        vecs = []
        for vec in coords:
            frac = tuple(_as_fraction(x) for x in vec)
            if all(x == 0 for x in frac):
                raise ZeroVector(f"zero coordinate vector in {coords!r}")
            vecs.append(frac)
        self.coords: tuple[tuple[Fraction, ...], ...] = tuple(vecs)
        # primitive integer representative, used for all polynomial evaluation
        self.eval_coords: tuple[tuple[int, ...], ...] = tuple(
            _primitive_int(v) for v in self.coords
        )
        key = []
        for vec in self.coords:
            lead = next(x for x in vec if x)
            key.append(tuple(x / lead for x in vec))
        self._key = tuple(key)

    def matches(self, shape: SpaceShape) -> bool:
        return len(self.coords) == shape.r and all(
            len(v) == n + 1 for v, n in zip(self.coords, shape.dims)
        )

    def factor_key(self, k: int) -> tuple[Fraction, ...]:
        """Canonical representative of the k-th factor (first nonzero scaled to 1)."""
        return self._key[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return "ProjPoint(%s)" % " x ".join(
            "[" + ":".join(str(x) for x in vec) + "]" for vec in self.coords
        )

    def text(self) -> str:
        """One-line form in the plain-text point format."""
        return " x ".join(
            "[" + ",".join(str(x) for x in vec) + "]" for vec in self.coords
        )


def p1(a, b) -> tuple:
    """Convenience coordinate pair for a point [a : b] of P^1."""
    return (a, b)


class PointSet:
    """Finite set of pairwise distinct points, kept in listed order."""

    def __init__(self, shape: SpaceShape, points: Iterable[ProjPoint]):
        pts = list(points)
        for p in pts:
            if not p.matches(shape):
                raise ShapeMismatch(f"point {p!r} does not live in {shape.dims}")
        seen = {}
        for idx, p in enumerate(pts):
            if p in seen:
                raise DuplicatePoint(
                    f"points #{seen[p] + 1} and #{idx + 1} are projectively equal"
                )
            seen[p] = idx
        self.shape = shape
        self.points: tuple[ProjPoint, ...] = tuple(pts)
        self._index = seen
        self._span_cache = {}  # lazy evaluation-span tables, see hilbert.EvalSpans

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p: ProjPoint) -> bool:
        return p in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.shape == other.shape
            and set(self.points) == set(other.points)
        )

    def __hash__(self):
        return hash((self.shape, frozenset(self.points)))

    def __repr__(self) -> str:
        return f"PointSet({self.shape.dims}, {len(self)} points)"

    def index_of(self, p: ProjPoint) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise PointNotFound(f"{p!r} is not in the set") from None

    def remove_point(self, p: ProjPoint) -> "PointSet":
        """The set minus one member, preserving the order of the rest."""
        idx = self.index_of(p)
        return PointSet(self.shape, self.points[:idx] + self.points[idx + 1 :])

    def text(self) -> str:
        return "\n".join(p.text() for p in self.points) + "\n"

    def json(self) -> str:
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else str(x)

        payload = {
            "shape": list(self.shape.dims),
            "points": [[[enc(x) for x in vec] for vec in p.coords] for p in self.points],
        }
        return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.parts
        if not p or any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def remove_point(x: PointSet, p: ProjPoint) -> PointSet:
    return x.remove_point(p)


# ---------------------------------------------------------------------------
# parsing / serialization


def _parse_factor(chunk: str, lineno: int) -> list[Fraction]:
    chunk = chunk.strip()
    if not (chunk.startswith("[") and chunk.endswith("]")):
        raise ParseError(f"line {lineno}: factor {chunk!r} is not bracketed")
    body = chunk[1:-1].strip()
    if not body:
        raise ParseError(f"line {lineno}: empty coordinate vector")
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad coordinate {tok!r}") from None
    return out


def parse_points(text: str, shape: SpaceShape | None = None) -> PointSet:
    """Parse the plain-text or JSON point format into a validated PointSet.

    Plain text: one point per line, factors separated by 'x', each factor
    '[c0,c1,...]' with integer or rational ('3/2') entries.  Lines starting
    with '#' and blank lines are ignored.  JSON: an object with fields
    "shape" and "points".  The shape is inferred when not supplied.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text, shape)
    rows: list[list[list[Fraction]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        factors = [_parse_factor(c, lineno) for c in line.split("x")]
        rows.append(factors)
    if not rows:
        raise ParseError("no points in input")
    if any(len(f) < 2 for f in rows[0]):
        raise ParseError("factors need at least two coordinates")
    shape = shape or SpaceShape(tuple(len(f) - 1 for f in rows[0]))
    return PointSet(shape, [ProjPoint(r) for r in rows])


def _parse_json(text: str, shape: SpaceShape | None) -> PointSet:
    try:
        payload = json.loads(text)
        dims = tuple(int(n) for n in payload["shape"])
        raw = payload["points"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad JSON point file: {exc}") from None
    shape = shape or SpaceShape(dims)
    if shape.dims != dims:
        raise ShapeMismatch(f"file shape {dims} does not match expected {shape.dims}")
    try:
        points = [ProjPoint(vecs) for vecs in raw]
    except (TypeError, ParseError) as exc:
        raise ParseError(f"bad JSON point entry: {exc}") from None
    return PointSet(shape, points)


# ---------------------------------------------------------------------------
# constructors

P1P1 = SpaceShape((1, 1))


def _default_p1_coords(count: int) -> list[tuple]:
    return [(1, i) for i in range(1, count + 1)]


def ferrers_points(
    parts: Partition | Sequence[int],
    first_coords: Sequence | None = None,
    second_coords: Sequence | None = None,
) -> PointSet:
    """Grid rows of decreasing length: row i holds the first parts[i] columns.

    Row points default to [1:i] and column points to [1:j].  The result is the
    staircase configuration of the partition inside P^1 x P^1.
    """
    if not isinstance(parts, Partition):
        parts = Partition(tuple(parts))
    nrows, ncols = len(parts), parts.parts[0]
    first = list(first_coords) if first_coords is not None else _default_p1_coords(nrows)
    second = list(second_coords) if second_coords is not None else _default_p1_coords(ncols)
    if len(first) < nrows or len(set(ProjPoint([c]) for c in first)) < len(first):
        raise InsufficientCoordinates(f"need {nrows} distinct first coordinates")
    if len(second) < ncols or len(set(ProjPoint([c]) for c in second)) < len(second):
        raise InsufficientCoordinates(f"need {ncols} distinct second coordinates")
    pts = [
        ProjPoint([first[i], second[j]])
        for i in range(nrows)
        for j in range(parts.parts[i])
    ]
    return PointSet(P1P1, pts)


def random_pointset(shape: SpaceShape, s: int, seed: int) -> PointSet:
    """s distinct points with small integer coordinates, deterministic in seed."""
    if s < 1:
        raise ValueError("need at least one point")
    rng = random.Random(seed)
    points: list[ProjPoint] = []
    seen = set()
    while len(points) < s:
        coords = []
        for n in shape.dims:
            vec = [rng.randint(-9, 9) for _ in range(n + 1)]
            while all(x == 0 for x in vec):
                vec = [rng.randint(-9, 9) for _ in range(n + 1)]
            coords.append(vec)
        p = ProjPoint(coords)
        if p not in seen:
            seen.add(p)
            points.append(p)
    return PointSet(shape, points)
