"""
Лакунарный ряд f(x) = Σ aⁿ x^(aⁿ): остаток Δ(x), функция Δ₀ и их нули
"""
from .config import Settings, settings
from .delta import delta0, delta_of_x, delta_oracle, sweep
from .exceptions import (
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    LacunaryError,
    NoiseFloorError,
    NoSignChangeError,
)
from .series import SeriesParams, f_bilateral, g_ref
from .zeros import build_table, fundamental_zero_delta0, list_zeros

__version__ = "1.0.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "GammaOverflowError",
    "LacunaryError",
    "NoiseFloorError",
    "NoSignChangeError",
    "SeriesParams",
    "Settings",
    "build_table",
    "delta0",
    "delta_of_x",
    "delta_oracle",
    "f_bilateral",
    "fundamental_zero_delta0",
    "g_ref",
    "list_zeros",
    "settings",
    "sweep",
]
