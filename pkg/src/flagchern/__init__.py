"""Exact Chern numbers and residue identities for complex flag manifolds."""

from .combinatorics import (
    Decomposition,
    Dims,
    default_assignment,
    derive_dims,
    enumerate_decompositions,
    make_assignment,
    make_decomposition,
    weight_multiset,
)
from .residue import (
    ResidueReport,
    Special,
    chern_number,
    chern_numbers,
    euler_characteristic,
    residue_sum,
    residue_sums,
    verify_constant,
    verify_special,
    verify_vanishing,
)
from .sympoly import (
    Partition,
    SymPolyExpr,
    c_lambda,
    elementary_symmetric,
    evaluate,
    is_homogeneous,
    make_partition,
    parse_expr,
    partitions,
    power_sum,
)

__version__ = "0.1.0"
