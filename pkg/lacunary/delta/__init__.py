"""
Остаток Δ(x) и функция Δ₀
"""
from .remainder import (
    REMAINDER_SIGN,
    DominantParams,
    RemainderSample,
    Route,
    delta0,
    delta0_dominant,
    delta_of_x,
    delta_oracle,
    dominant_params,
    harmonic_sum_at,
    oracle_noise,
    r_sum,
    r_sum_bound,
    sample_remainder,
)
from .sweep import SweepRecord, sweep, sweep_grid

__all__ = [
    "REMAINDER_SIGN",
    "DominantParams",
    "RemainderSample",
    "Route",
    "delta0",
    "delta0_dominant",
    "delta_of_x",
    "delta_oracle",
    "dominant_params",
    "harmonic_sum_at",
    "oracle_noise",
    "r_sum",
    "r_sum_bound",
    "sample_remainder",
    "SweepRecord",
    "sweep",
    "sweep_grid",
]
