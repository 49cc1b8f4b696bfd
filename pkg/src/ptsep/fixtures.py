"""Built-in example configurations used by the regression suite and docs."""

from __future__ import annotations

from itertools import combinations

from .degrees import SpaceShape
from .errors import ShapeMismatch
from .linalg import DenseMatrix, rank
from .points import P1P1, PointSet, ProjPoint, ferrers_points

P2P2 = SpaceShape((2, 2))


def staircase_19() -> PointSet:
    """19 points [1:i] x [1:j] in staircase position, partition (5,4,4,3,2,1)."""
    return ferrers_points((5, 4, 4, 3, 2, 1))


def staircase_19_point(i: int, j: int) -> ProjPoint:
    """The member [1:i] x [1:j] of the 19-point staircase."""
    return ProjPoint([(1, i), (1, j)])


def ferrers_6531() -> PointSet:
    """The 15-point staircase of the partition (6,5,3,1)."""
    return ferrers_points((6, 5, 3, 1))


def scattered_11() -> PointSet:
    """11 points [1:i] x [1:j] without property (*); ideal needs 7 generators."""
    pairs = [
        (1, 1), (1, 3), (1, 5),
        (2, 2), (2, 4), (2, 5),
        (3, 1), (3, 2), (3, 3),
        (4, 1), (4, 4),
    ]
    return PointSet(P1P1, [ProjPoint([(1, i), (1, j)]) for i, j in pairs])


def ruling_points(b: int) -> PointSet:
    """b points sharing one first coordinate: [1:1] x [1:j] for j = 1..b."""
    return PointSet(P1P1, [ProjPoint([(1, 1), (1, j)]) for j in range(1, b + 1)])


GENERAL_PLANE_SEXTUPLE = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 1),
    (1, 2, 3),
    (1, 4, 5),
)

# pairs (i, j), 1-based, of the 28 retained products Q_ij = A_i x A_j
PRODUCT_28_PAIRS = (
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 6),
    (3, 1), (3, 2), (3, 5), (3, 6),
    (4, 1), (4, 2), (4, 5), (4, 6),
    (5, 1), (5, 3), (5, 6),
    (6, 1), (6, 2), (6, 3), (6, 4), (6, 5), (6, 6),
)


def validate_general_position(sextuple=GENERAL_PLANE_SEXTUPLE) -> None:
    """Assert no three of the six plane points align and every five impose
    independent conic conditions (all 3x3 determinants nonzero, every 5x6
    conic evaluation matrix of full rank)."""
    for p, q, r in combinations(sextuple, 3):
        det = (
            p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0])
        )
        if det == 0:
            raise ShapeMismatch(f"collinear triple {p}, {q}, {r}")
    for five in combinations(sextuple, 5):
        rows = [
            (x * x, x * y, x * z, y * y, y * z, z * z) for x, y, z in five
        ]
        if rank(DenseMatrix.from_rows(rows)) != 5:
            raise ShapeMismatch(f"five points on a pencil of conics: {five}")


def product_28() -> PointSet:
    """28 of the 36 pairwise products of six general plane points, in P^2 x P^2."""
    validate_general_position()
    pts = [
        ProjPoint([GENERAL_PLANE_SEXTUPLE[i - 1], GENERAL_PLANE_SEXTUPLE[j - 1]])
        for i, j in PRODUCT_28_PAIRS
    ]
    return PointSet(P2P2, pts)


def product_28_point(i: int, j: int) -> ProjPoint:
    return ProjPoint([GENERAL_PLANE_SEXTUPLE[i - 1], GENERAL_PLANE_SEXTUPLE[j - 1]])


# last-module shifts of the 28-point configuration's known minimal resolution
PRODUCT_28_LAST_SHIFTS = {(3, 4): 4, (4, 3): 4, (4, 4): 1}
