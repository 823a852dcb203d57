"""Exact rational linear algebra and the dense brute-force oracle."""

from .exact import (
    to_qq,
    to_fraction,
    fraction_text,
    matrix,
    zeros,
    identity,
    from_columns,
    columns,
    column,
    entries,
    to_lists,
    is_zero,
    hstack,
    vstack,
    matmul,
    add,
    subtract,
    combine,
    scale,
    transpose,
    select_columns,
    select_rows,
    rref,
    rank,
    pivot_columns,
    column_basis,
    nullspace_basis,
    in_span,
    solve_many,
    solve,
    apply,
    intersection_basis,
    intersection_dim,
    sum_basis,
    gram,
)
from .oracle import (
    oracle_rank,
    oracle_incidence,
    oracle_betti,
    oracle_subcomplex_rank,
    oracle_subspace_dims,
    oracle_equivariant_ranks,
)

__all__ = [
    "to_qq",
    "to_fraction",
    "fraction_text",
    "matrix",
    "zeros",
    "identity",
    "from_columns",
    "columns",
    "column",
    "entries",
    "to_lists",
    "is_zero",
    "hstack",
    "vstack",
    "matmul",
    "add",
    "subtract",
    "combine",
    "scale",
    "transpose",
    "select_columns",
    "select_rows",
    "rref",
    "rank",
    "pivot_columns",
    "column_basis",
    "nullspace_basis",
    "in_span",
    "solve_many",
    "solve",
    "apply",
    "intersection_basis",
    "intersection_dim",
    "sum_basis",
    "gram",
    "oracle_rank",
    "oracle_incidence",
    "oracle_betti",
    "oracle_subcomplex_rank",
    "oracle_subspace_dims",
    "oracle_equivariant_ranks",
]
