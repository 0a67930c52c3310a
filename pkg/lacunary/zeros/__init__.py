"""
Нули Δ(x) и Δ₀(x)
"""
from .finder import (
    ZeroLocation,
    closed_form_first_zero,
    dominant_zero_s,
    find_zero_delta_direct,
    fundamental_zero_delta0,
    half_period,
    map_zero_to_delta,
    nth_zero,
    period_zeros,
    reduce_to_window,
    refine_zero_delta0,
    scan_sign_changes,
    taylor_map_z0_to_z,
    taylor_map_z_to_z0,
    zero_ladder,
)
from .table import (
    ZeroTableRow,
    ZeroTarget,
    abuild_table,
    build_table,
    list_zeros,
    relative_gap,
    table_row,
)

__all__ = [
    "ZeroLocation",
    "ZeroTableRow",
    "ZeroTarget",
    "abuild_table",
    "build_table",
    "closed_form_first_zero",
    "dominant_zero_s",
    "find_zero_delta_direct",
    "fundamental_zero_delta0",
    "half_period",
    "list_zeros",
    "map_zero_to_delta",
    "nth_zero",
    "period_zeros",
    "reduce_to_window",
    "refine_zero_delta0",
    "relative_gap",
    "scan_sign_changes",
    "table_row",
    "taylor_map_z0_to_z",
    "taylor_map_z_to_z0",
    "zero_ladder",
]
