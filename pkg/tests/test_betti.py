"""Betti tables: Koszul builds, mapping cones, cancellation, last shifts."""

from collections import Counter
from math import comb

import pytest

from ptsep.betti import (
    BettiTable,
    cancel,
    koszul_point_table,
    last_shift_criterion,
    mapping_cone_table,
)
from ptsep.degrees import DegreeBox, SpaceShape
from ptsep.errors import LengthMismatch, NotCancellable
from ptsep.fixtures import PRODUCT_28_LAST_SHIFTS, staircase_19
from ptsep.hilbert import kpoly_check
from ptsep.p1p1 import acm_resolution, partition_of
from ptsep.points import ProjPoint, ferrers_points


def test_koszul_p1p1():
    table = koszul_point_table(SpaceShape((1, 1)))
    assert table.multiset(1) == Counter({(1, 0): 1, (0, 1): 1})
    assert table.multiset(2) == Counter({(1, 1): 1})


def test_koszul_p2p2():
    table = koszul_point_table(SpaceShape((2, 2)))
    assert table.multiset(4) == Counter({(2, 2): 1})
    assert table.multiset(1) == Counter({(1, 0): 2, (0, 1): 2})
    for j in range(5):
        assert table.total(j) == comb(4, j)


def test_koszul_triple():
    table = koszul_point_table(SpaceShape((1, 1, 1)))
    assert table.length == 3
    assert table.multiset(3) == Counter({(1, 1, 1): 1})
    for j in range(4):
        assert table.total(j) == comb(3, j)


def test_mapping_cone_staircase_19():
    fx = acm_resolution(partition_of(staircase_19()))
    cone = mapping_cone_table(fx, (2, 3), SpaceShape((1, 1)))
    assert cone.length == 3
    assert cone.multiset(3) == Counter({(3, 4): 1})
    assert cone.multiset(2) == Counter(
        {(3, 4): 1, (1, 5): 1, (4, 3): 1, (5, 2): 1, (6, 1): 1, (2, 4): 1, (3, 3): 1}
    )
    assert cone.multiset(1) == Counter(
        {(0, 5): 1, (1, 4): 1, (4, 2): 1, (5, 1): 1, (6, 0): 1, (3, 3): 1, (2, 3): 1}
    )


def test_mapping_cone_single_point():
    shape = SpaceShape((1, 1))
    cone = mapping_cone_table(koszul_point_table(shape), (0, 0), shape)
    assert cone.length == 3
    assert cone.multiset(3) == Counter({(1, 1): 1})


def test_mapping_cone_p2p2_top_shift():
    shape = SpaceShape((2, 2))
    fx = BettiTable.resolution_of_quotient({4: Counter(PRODUCT_28_LAST_SHIFTS)}, r=2)
    cone = mapping_cone_table(fx, (2, 2), shape)
    assert cone.multiset(5) == Counter({(4, 4): 1})


def test_mapping_cone_length_checked():
    fx = acm_resolution(partition_of(staircase_19()))
    with pytest.raises(LengthMismatch):
        mapping_cone_table(fx, (2, 2, 2), SpaceShape((1, 1, 1)))


def test_cancel_drops_length():
    fx = acm_resolution(partition_of(staircase_19()))
    cone = mapping_cone_table(fx, (2, 3), SpaceShape((1, 1)))
    trimmed = cancel(cone, 3, (3, 4))
    assert trimmed.length == 2
    assert trimmed.multiset(2)[(3, 4)] == 0
    # original untouched
    assert cone.multiset(3) == Counter({(3, 4): 1})


def test_cancel_absent_shift():
    fx = acm_resolution(partition_of(staircase_19()))
    with pytest.raises(NotCancellable):
        cancel(fx, 2, (9, 9))
    # (1,5) sits at index 2 only; a trivial pair needs it at index 1 as well
    with pytest.raises(NotCancellable):
        cancel(fx, 2, (1, 5))


def test_cancel_preserves_hilbert_identity():
    x = staircase_19()
    fx = acm_resolution(partition_of(x))
    y = x.remove_point(ProjPoint([(1, 3), (1, 4)]))
    cone = mapping_cone_table(fx, (2, 3), SpaceShape((1, 1)))
    box = DegreeBox((8, 8))
    assert kpoly_check(y, cone, box)
    trimmed = cancel(cone, 3, (3, 4))
    assert kpoly_check(y, trimmed, box)


def test_last_shift_criterion_staircase():
    fx = acm_resolution(partition_of(staircase_19()))
    shape = SpaceShape((1, 1))
    assert last_shift_criterion(fx, (2, 3), shape)
    # degree of an inner point of the (6,5,3,1) staircase: criterion fails
    fx2 = acm_resolution(partition_of(ferrers_points((6, 5, 3, 1))))
    assert not last_shift_criterion(fx2, (2, 4), shape)
    assert last_shift_criterion(fx2, (2, 2), shape)


def test_last_shift_criterion_product_28():
    fx = BettiTable.resolution_of_quotient({4: Counter(PRODUCT_28_LAST_SHIFTS)}, r=2)
    assert last_shift_criterion(fx, (2, 2), SpaceShape((2, 2)))
    assert not last_shift_criterion(fx, (1, 1), SpaceShape((2, 2)))


def test_table_negative_multiplicity_rejected():
    with pytest.raises(ValueError):
        BettiTable({0: Counter({(0, 0): -1})})


def test_table_text_and_json():
    fx = acm_resolution(partition_of(ferrers_points((2, 1))))
    text = fx.text()
    assert text.startswith("0: (0,0)")
    assert '"1"' in fx.json()
