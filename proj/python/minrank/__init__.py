"""SupportMinors linearization for MinRank over prime fields."""

from ._minrank import (
    CapExceeded,
    Instance,
    InvalidArgument,
    brute_force,
    estimate,
    gen_planted,
    gen_random,
    macaulay_rank,
    macaulay_shape,
    rank_check,
    solve,
    span_check,
    submax_dim,
    submax_dim_formula,
    verify,
    xonly_syzygy_dim,
)

__all__ = [
    "CapExceeded",
    "Instance",
    "InvalidArgument",
    "brute_force",
    "estimate",
    "gen_planted",
    "gen_random",
    "macaulay_rank",
    "macaulay_shape",
    "rank_check",
    "solve",
    "span_check",
    "submax_dim",
    "submax_dim_formula",
    "verify",
    "xonly_syzygy_dim",
]
