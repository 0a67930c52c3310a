"""
Табулирование f, g, Δ и Δ₀ на сетке (данные для графиков)
"""
import logging
import math
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..exceptions import DomainError
from ..series import SeriesParams, f_of_u, g_of_u, log_inv
from .remainder import delta0

logger = logging.getLogger(__name__)


class SweepRecord(BaseModel):
    """Отсчёт (x, f, g, Δ, Δ₀)"""

    model_config = ConfigDict(frozen=True)

    x: float
    f: float
    g: float
    delta: float
    delta0: float


def sweep_grid(x_from: float, x_to: float, points: int, log_w: bool = False) -> List[float]:
    """
    Сетка по x с концами включительно

    При log_w узлы равномерны по ln(1 - x), что сгущает их у x = 1.
    """
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise DomainError(f"points must be an integer >= 2, got {points!r}")
    if not (0.0 < x_from < x_to < 1.0):
        raise DomainError(f"sweep range must satisfy 0 < from < to < 1, got [{x_from!r}, {x_to!r}]")

    if log_w:
        s = np.linspace(math.log1p(-x_from), math.log1p(-x_to), points)
        grid = -np.expm1(s)
    else:
        grid = np.linspace(x_from, x_to, points)

    grid[0] = x_from
    grid[-1] = x_to
    return [float(x) for x in grid]


def sweep(x_from: float, x_to: float, points: int, params: SeriesParams, log_w: bool = False) -> List[SweepRecord]:
    """
    Значения f, g, Δ (сумма по характерам) и Δ₀(1 - x) на сетке

    Args:
        x_from: Левый конец
        x_to: Правый конец
        points: Число узлов (концы включены)
        params: Параметры ряда
        log_w: Равномерная сетка по ln(1 - x)

    Returns:
        Отсчёты в порядке возрастания x
    """
    records = []
    for x in sweep_grid(x_from, x_to, points, log_w):
        u = log_inv(x)
        records.append(
            SweepRecord(
                x=x,
                f=f_of_u(u, params),
                g=g_of_u(u, params.a),
                delta=delta0(u, params),
                delta0=delta0(1.0 - x, params),
            )
        )

    logger.info(f"Sweep: a={params.a}, points={len(records)}, log_w={log_w}")
    return records
