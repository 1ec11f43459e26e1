"""
Lie-theoretic core: root systems, Weyl groups, weight orders and
representation dimensions, all in exact integer or rational arithmetic.
"""

from .root_system import (
    RootSystemData,
    Weight,
    build_root_system,
    dot_action,
    format_weight,
    pairing,
    parse_weight,
    phi,
    root_coords,
    weyl_apply,
)
from .weight_order import canonical_class, is_succeq_zero, root_order_geq, succeq


__all__ = [
    "RootSystemData",
    "Weight",
    "build_root_system",
    "canonical_class",
    "dot_action",
    "format_weight",
    "is_succeq_zero",
    "pairing",
    "parse_weight",
    "phi",
    "root_coords",
    "root_order_geq",
    "succeq",
    "weyl_apply",
]
