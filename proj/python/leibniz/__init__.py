"""Exact computations with right Leibniz algebras."""

from ._leibniz import (
    Algebra,
    LeibnizError,
    Pair,
    abelian_pair_cover_check,
    catalog,
    catalog_pairs,
    classify,
    cocycle_cover,
    defect,
    direct_sum,
    direct_sum_pair,
    exterior_dim,
    hl1,
    hl2,
    kunneth_holds,
    tensor_dim,
)

__all__ = [
    "Algebra",
    "LeibnizError",
    "Pair",
    "abelian_pair_cover_check",
    "catalog",
    "catalog_pairs",
    "classify",
    "cocycle_cover",
    "defect",
    "direct_sum",
    "direct_sum_pair",
    "exterior_dim",
    "hl1",
    "hl2",
    "kunneth_holds",
    "tensor_dim",
]
