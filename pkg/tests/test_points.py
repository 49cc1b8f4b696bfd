"""Point model, parsing, serialization, constructors."""

from fractions import Fraction

import pytest

from ptsep.degrees import SpaceShape
from ptsep.errors import (
    DuplicatePoint,
    InsufficientCoordinates,
    ParseError,
    PointNotFound,
    ShapeMismatch,
    ZeroVector,
)
from ptsep.p1p1 import star_property
from ptsep.points import (
    P1P1,
    Partition,
    PointSet,
    ProjPoint,
    ferrers_points,
    parse_points,
    random_pointset,
)


def test_projective_equality_and_hash():
    a = ProjPoint([(1, 1), (1, 1)])
    b = ProjPoint([(2, 2), (3, 3)])
    assert a == b
    assert hash(a) == hash(b)
    c = ProjPoint([(1, 1), (1, 2)])
    assert a != c


def test_zero_vector_rejected():
    with pytest.raises(ZeroVector):
        ProjPoint([(0, 0), (1, 2)])


def test_parse_single_point():
    x = parse_points("[1,0] x [1,0]\n")
    assert len(x) == 1
    assert x.shape.dims == (1, 1)


def test_parse_duplicate_projective():
    with pytest.raises(DuplicatePoint):
        parse_points("[1,1] x [1,1]\n[2,2] x [3,3]\n")


def test_parse_rationals_and_comments():
    x = parse_points("# two points\n[3/2,1] x [1,0]\n\n[1,1] x [0,1]\n")
    assert len(x) == 2
    assert x.points[0].coords[0][0] == Fraction(3, 2)


def test_parse_malformed():
    with pytest.raises(ParseError):
        parse_points("[1,2 x [1,0]\n")
    with pytest.raises(ParseError):
        parse_points("[1,a] x [1,0]\n")
    with pytest.raises(ParseError):
        parse_points("\n")


def test_parse_staircase_19():
    lines = []
    for i, parts in enumerate((5, 4, 4, 3, 2, 1), start=1):
        for j in range(1, parts + 1):
            lines.append(f"[1,{i}] x [1,{j}]")
    x = parse_points("\n".join(lines))
    assert len(x) == 19


def test_text_roundtrip_up_to_scaling():
    x = parse_points("[2,4] x [1,3]\n[1/2,1] x [0,7]\n")
    again = parse_points(x.text())
    assert x == again


def test_json_roundtrip():
    x = parse_points("[2,4] x [1,3]\n[1/2,1] x [0,5]\n")
    again = parse_points(x.json())
    assert x == again
    assert again.shape == x.shape


def test_json_shape_checked():
    with pytest.raises(ParseError):
        parse_points('{"shape": [1, 1]}')


def test_remove_point():
    x = parse_points("[1,1] x [1,1]\n[1,2] x [1,1]\n")
    y = x.remove_point(ProjPoint([(1, 1), (1, 1)]))
    assert len(y) == 1
    with pytest.raises(PointNotFound):
        x.remove_point(ProjPoint([(1, 9), (1, 9)]))


def test_remove_then_union_recovers_the_set():
    x = ferrers_points((3, 1))
    p = x.points[2]
    y = x.remove_point(p)
    assert set(y.points) | {p} == set(x.points)


def test_remove_singleton_empties():
    x = parse_points("[1,0] x [1,0]\n")
    y = x.remove_point(x.points[0])
    assert len(y) == 0


def test_ferrers_points_shapes():
    x = ferrers_points((6, 5, 3, 1))
    assert len(x) == 15
    single = ferrers_points((1,))
    assert len(single) == 1
    grid = ferrers_points((3, 3))
    assert len(grid) == 6


def test_ferrers_points_star_property():
    for parts in [(1,), (4, 2, 1), (5, 5, 5), (6, 5, 3, 1), (2, 2, 1)]:
        assert star_property(ferrers_points(parts))[0]


def test_ferrers_insufficient_coordinates():
    with pytest.raises(InsufficientCoordinates):
        ferrers_points((3, 1), first_coords=[(1, 1), (1, 1)])
    with pytest.raises(InsufficientCoordinates):
        ferrers_points((3, 1), second_coords=[(1, 1), (1, 2)])


def test_random_pointset_deterministic_and_distinct():
    a = random_pointset(P1P1, 12, seed=99)
    b = random_pointset(P1P1, 12, seed=99)
    assert a.points == b.points
    assert len(set(a.points)) == 12
    c = random_pointset(SpaceShape((1, 1, 1)), 6, seed=5)
    assert len(c) == 6


def test_pointset_shape_validation():
    with pytest.raises(ShapeMismatch):
        PointSet(P1P1, [ProjPoint([(1, 0, 0), (1, 0)])])


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).size == 4
