"""Hilbert functions: matrices, tables, ideal pieces, and the table identity."""

import random

import pytest

from ptsep.betti import BettiTable, koszul_point_table
from ptsep.degrees import DegreeBox, SpaceShape, leq, monomial_count
from ptsep.errors import ShapeMismatch
from ptsep.fixtures import ruling_points, staircase_19
from ptsep.hilbert import (
    default_box,
    evaluation_matrix,
    hilbert_table,
    hilbert_value,
    ideal_piece,
    kpoly_check,
    removal_drop_table,
)
from ptsep.linalg import rank
from ptsep.p1p1 import acm_resolution, partition_of
from ptsep.points import P1P1, PointSet, ProjPoint, ferrers_points, random_pointset


def test_evaluation_matrix_degree_zero_is_ones_column():
    x = random_pointset(P1P1, 5, seed=1)
    m = evaluation_matrix(x, (0, 0))
    assert (m.rows, m.cols) == (5, 1)
    assert all(e == 1 for e in m.entries)


def test_evaluation_matrix_shared_first_coordinate():
    x = PointSet(P1P1, [ProjPoint([(1, 2), (1, 1)]), ProjPoint([(2, 4), (1, 5)])])
    assert rank(evaluation_matrix(x, (1, 0))) == 1


def test_column_forms_through_two_points_distinct_second_coordinates():
    from ptsep.linalg import kernel_basis

    x = PointSet(P1P1, [ProjPoint([(1, 2), (1, 1)]), ProjPoint([(1, 3), (1, 5)])])
    assert kernel_basis(evaluation_matrix(x, (0, 1))) == []


def test_staircase_19_rank_and_stabilization():
    x = staircase_19()
    assert rank(evaluation_matrix(x, (2, 3))) == 12
    table = hilbert_table(x, DegreeBox((6, 5)))
    assert table[(5, 4)] == 19
    assert table[(4, 4)] == 18
    assert table[(5, 3)] == 18
    assert table[(6, 5)] == 19


def test_hilbert_value_singleton():
    x = PointSet(P1P1, [ProjPoint([(1, 7), (2, 3)])])
    for degree in [(0, 0), (1, 0), (3, 2)]:
        assert hilbert_value(x, degree) == 1


def test_hilbert_value_point_order_and_scaling_invariance():
    x = random_pointset(P1P1, 6, seed=42)
    base = hilbert_table(x, DegreeBox((4, 4)))
    scaled_pts = [
        ProjPoint([tuple(7 * c for c in p.coords[0]), p.coords[1]]) for p in x.points
    ]
    rng = random.Random(0)
    rng.shuffle(scaled_pts)
    y = PointSet(P1P1, scaled_pts)
    assert hilbert_table(y, DegreeBox((4, 4))).values == base.values


def test_table_matches_blunt_rank_route():
    rng = random.Random(8)
    for shape in (P1P1, SpaceShape((1, 1, 1)), SpaceShape((2, 1))):
        for _ in range(4):
            s = rng.randint(1, 6)
            x = random_pointset(shape, s, seed=rng.randint(0, 999))
            box = DegreeBox(tuple(rng.randint(1, 3) for _ in shape.dims))
            table = hilbert_table(x, box)
            for i in box:
                assert table[i] == hilbert_value(x, i)


def test_table_monotone_and_bounded():
    rng = random.Random(12)
    for seed in range(8):
        s = rng.randint(2, 8)
        x = random_pointset(P1P1, s, seed=seed)
        box = default_box(x)
        table = hilbert_table(x, box)
        assert table[(0, 0)] == 1
        assert table[box.upper] == s
        degrees = list(box)
        for i in degrees:
            assert 1 <= table[i] <= s
            for j in degrees:
                if leq(i, j):
                    assert table[i] <= table[j]


def test_corner_value_reaches_s_tiny_triple():
    x = random_pointset(SpaceShape((1, 1, 1)), 4, seed=3)
    assert hilbert_value(x, (3, 3, 3)) == 4


def test_ruling_pattern():
    # b points on one horizontal ruling: H(i, j) = min(j + 1, b), every row alike
    x = ruling_points(4)
    table = hilbert_table(x, DegreeBox((2, 5)))
    for i in range(3):
        for j in range(6):
            assert table[(i, j)] == min(j + 1, 4)


def test_ruling_removed_pattern():
    x = ruling_points(4)
    y = x.remove_point(x.points[0])
    table = hilbert_table(y, DegreeBox((2, 5)))
    for i in range(3):
        for j in range(6):
            assert table[(i, j)] == min(j + 1, 3)


def test_ideal_piece_examples():
    single = PointSet(P1P1, [ProjPoint([(1, 2), (1, 3)])])
    assert len(ideal_piece(single, (1, 0))) == 1
    x = ruling_points(4)
    assert len(ideal_piece(x, (0, 2))) == 0
    assert len(ideal_piece(staircase_19(), (3, 3))) == 1


def test_ideal_piece_dimension_identity():
    rng = random.Random(77)
    for seed in range(6):
        x = random_pointset(P1P1, rng.randint(1, 7), seed=seed + 500)
        for degree in [(0, 0), (1, 2), (2, 2), (3, 1)]:
            piece = ideal_piece(x, degree)
            assert monomial_count(x.shape, degree) == hilbert_value(x, degree) + len(piece)
            # every basis form vanishes on all points
            m = evaluation_matrix(x, degree)
            for v in piece.basis:
                for r in range(m.rows):
                    assert sum(a * b for a, b in zip(m.row(r), v)) == 0


def test_kpoly_single_point_koszul():
    x = PointSet(P1P1, [ProjPoint([(1, 1), (1, 2)])])
    table = koszul_point_table(x.shape)
    assert kpoly_check(x, table, DegreeBox((3, 3)))


def test_kpoly_staircase_and_corruption():
    x = ferrers_points((6, 5, 3, 1))
    res = acm_resolution(partition_of(x))
    assert kpoly_check(x, res, DegreeBox((7, 7)))
    broken = res.copy()
    shift = next(iter(broken.shifts[2]))
    del broken.shifts[2][shift]
    broken = BettiTable(broken.shifts)
    assert not kpoly_check(x, broken, DegreeBox((7, 7)))


def test_kpoly_shape_guard():
    x = random_pointset(SpaceShape((1, 1, 1)), 2, seed=1)
    with pytest.raises(ShapeMismatch):
        kpoly_check(x, koszul_point_table(x.shape), DegreeBox((1, 1, 1)))


def test_removal_drop_table_matches_table_differences():
    rng = random.Random(21)
    for seed in range(6):
        s = rng.randint(2, 7)
        x = random_pointset(P1P1, s, seed=seed + 900)
        box = DegreeBox((s - 1, s - 1))
        drops = removal_drop_table(x, box)
        hx = hilbert_table(x, box)
        for idx, p in enumerate(x.points):
            hy = hilbert_table(x.remove_point(p), box)
            for i in box:
                assert drops[i][idx] == (hx[i] - hy[i] == 1)


def test_hilbert_table_serialization():
    x = ferrers_points((2, 1))
    table = hilbert_table(x, DegreeBox((2, 2)))
    text = table.text()
    assert text.splitlines()[0].split() == ["1", "2", "2"]
    assert '"box"' in table.json()


def test_frozen_small_staircase_table():
    # independent expected values: evaluation-matrix ranks of the (2,1) staircase
    x = ferrers_points((2, 1))
    expected = {
        (0, 0): 1, (0, 1): 2, (0, 2): 2,
        (1, 0): 2, (1, 1): 3, (1, 2): 3,
        (2, 0): 2, (2, 1): 3, (2, 2): 3,
    }
    table = hilbert_table(x, DegreeBox((2, 2)))
    assert table.values == expected
    for degree, value in expected.items():
        assert rank(evaluation_matrix(x, degree)) == value
