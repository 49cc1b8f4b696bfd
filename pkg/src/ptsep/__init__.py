"""Exact-arithmetic toolkit for finite point sets in products of projective spaces.

Computes multigraded Hilbert functions, separator degrees, Cohen-Macaulay
certificates and resolution shift data, all over the rationals with no
floating point anywhere.
"""

from .betti import (
    BettiTable,
    cancel,
    koszul_point_table,
    last_shift_criterion,
    mapping_cone_table,
)
from .degrees import (
    DegreeBox,
    MultiDegree,
    SpaceShape,
    in_upset,
    leq,
    min_elements,
    monomial_basis,
    monomial_count,
)
from .forms import MultiForm, linear_form, product_of_forms, vanishing_linear_form
from .hilbert import (
    GradedPiece,
    HilbertTable,
    default_box,
    evaluation_matrix,
    hilbert_table,
    hilbert_value,
    ideal_piece,
    kpoly_check,
)
from .linalg import DenseMatrix, kernel_basis, rank, span_dim
from .p1p1 import (
    LabeledGrid,
    NuResult,
    RemovalOutcome,
    StarWitness,
    acm_generators,
    acm_resolution,
    conjugate,
    ferrers_ascii,
    is_acm,
    nu_bruteforce,
    partition_of,
    point_degree_acm,
    relabel,
    removal_classification,
    removed_resolution,
    star_property,
)
from .points import (
    Partition,
    PointSet,
    ProjPoint,
    ferrers_points,
    parse_points,
    random_pointset,
    remove_point,
)
from .separators import (
    DegreeSet,
    all_degree_sets,
    box_stability_check,
    degree_set,
    lift_separator,
    minimal_separator,
    separator_space_dim,
    verify_colon,
    verify_ideal_sum,
)

__version__ = "0.1.0"
