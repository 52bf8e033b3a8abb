"""Chess-coloured Ferrers diagrams: counts, witnesses, and exhaustive checks.

Thin Python bindings over the C++ core. Partitions are plain lists of
nonincreasing positive integers; Castelnuovo polynomials are lists of
coefficients, lowest degree first.
"""

from ferrers._core import (
    analyze,
    bw,
    bw_from_nc,
    census,
    check_names,
    chess_count,
    conjugate,
    count_by_bw,
    distinct_partitions,
    enumerate_castelnuovo,
    equality_staircase,
    from_partition,
    is_castelnuovo,
    is_distinct,
    is_realizable_bw,
    is_realizable_nc,
    nc_from_bw,
    partitions,
    reduce_classify,
    render_castelnuovo,
    render_ferrers,
    signed_sum,
    staircase,
    star,
    thmb_compose,
    thmb_decompose,
    to_distinct_partition,
    verify_range,
    witness_castelnuovo,
    witness_partition,
)

__all__ = [
    "analyze",
    "bw",
    "bw_from_nc",
    "census",
    "check_names",
    "chess_count",
    "conjugate",
    "count_by_bw",
    "distinct_partitions",
    "enumerate_castelnuovo",
    "equality_staircase",
    "from_partition",
    "is_castelnuovo",
    "is_distinct",
    "is_realizable_bw",
    "is_realizable_nc",
    "nc_from_bw",
    "partitions",
    "reduce_classify",
    "render_castelnuovo",
    "render_ferrers",
    "signed_sum",
    "staircase",
    "star",
    "thmb_compose",
    "thmb_decompose",
    "to_distinct_partition",
    "verify_range",
    "witness_castelnuovo",
    "witness_partition",
]
