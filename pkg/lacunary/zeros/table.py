"""
Таблица нулей Δ(x) и Δ₀(x)
"""
import asyncio
import logging
import math
from enum import Enum
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from ..complexfn import check_base
from ..config import settings
from ..exceptions import DomainError
from ..series import SeriesParams
from .finder import (
    ZeroLocation,
    dominant_zero_s,
    half_period,
    map_zero_to_delta,
    nth_zero,
    params_for,
    period_zeros,
    reduce_to_window,
    zero_ladder,
)

logger = logging.getLogger(__name__)


class ZeroTarget(str, Enum):
    """Чьи нули перечислять"""

    DELTA = "delta"
    DELTA0 = "delta0"
    DOMINANT = "dominant"


class ZeroTableRow(BaseModel):
    """
    Строка таблицы: парные нули Δ и Δ₀

    rel_err = |(x_delta - x_delta0) / (1 - x_delta)|; x_ladder: затравка лестницы
    w₀·a^(-n/2) до уточнения.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    x_delta: float
    x_delta0: float
    x_ladder: float
    rel_err: float
    w_delta: float
    w_delta0: float
    s_delta0: float


def relative_gap(w0: float) -> float:
    """
    (w₀ - w_Δ)/w_Δ при w_Δ = 1 - e^(-w₀)

    Для малых w₀ берётся ряд w/2 + w²/12 - w⁴/720, чтобы не терять знаки на вычитании.
    """
    if w0 < 1e-4:
        return w0 / 2.0 + w0 * w0 / 12.0 - w0 ** 4 / 720.0
    w_delta = -math.expm1(-w0)
    return (w0 - w_delta) / w_delta


def table_row(zeros: Sequence[ZeroLocation], n: int, params: SeriesParams) -> ZeroTableRow:
    """
    Посчитать одну строку таблицы

    Args:
        zeros: Нули одного периода (period_zeros), первым идёт фундаментальный
        n: Номер строки
        params: Параметры ряда
    """
    seed = zero_ladder(zeros[0], n, params.a)
    zero = nth_zero(zeros, n, params.a)
    mapped = map_zero_to_delta(zero)
    return ZeroTableRow(
        n=n,
        x_delta=mapped.x,
        x_delta0=zero.x,
        x_ladder=seed.x,
        rel_err=relative_gap(zero.w),
        w_delta=mapped.w,
        w_delta0=zero.w,
        s_delta0=zero.s,
    )


def _check_count(count: int):
    if isinstance(count, bool) or not isinstance(count, int) or not (1 <= count <= settings.MAX_TABLE_ROWS):
        raise DomainError(f"count must be an integer in [1, {settings.MAX_TABLE_ROWS}], got {count!r}")


def build_table(a: float, count: int, params: Optional[SeriesParams] = None) -> List[ZeroTableRow]:
    """
    Таблица первых count нулей Δ и Δ₀

    Args:
        a: Основание, a > 1
        count: Число строк, 1..MAX_TABLE_ROWS
        params: Параметры ряда

    Returns:
        Строки в порядке n = 0, 1, ...
    """
    a = check_base(a)
    _check_count(count)
    params = params_for(a, params)

    zeros = period_zeros(a, params)
    rows = [table_row(zeros, n, params) for n in range(count)]

    logger.info(f"Built zero table: a={a}, rows={len(rows)}, zeros per period={len(zeros)}")
    return rows


async def abuild_table(a: float, count: int, params: Optional[SeriesParams] = None) -> List[ZeroTableRow]:
    """Асинхронный вариант build_table: строки считаются параллельно в потоках"""
    a = check_base(a)
    _check_count(count)
    params = params_for(a, params)

    zeros = await asyncio.to_thread(period_zeros, a, params)
    rows = await asyncio.gather(
        *(asyncio.to_thread(table_row, zeros, n, params) for n in range(count))
    )

    logger.info(f"Built zero table concurrently: a={a}, rows={len(rows)}")
    return list(rows)


def list_zeros(a: float, target: ZeroTarget, count: int, params: Optional[SeriesParams] = None) -> List[ZeroLocation]:
    """
    Первые count нулей выбранной функции, по возрастанию x

    Args:
        a: Основание, a > 1
        target: delta, delta0 или dominant (точные нули доминирующей синусоиды)
        count: Число нулей
        params: Параметры ряда

    Returns:
        Список ZeroLocation
    """
    a = check_base(a)
    _check_count(count)
    target = ZeroTarget(target)
    params = params_for(a, params)

    if target is ZeroTarget.DOMINANT:
        first = ZeroLocation.from_s(reduce_to_window(dominant_zero_s(a), a))
        h = half_period(a)
        return [ZeroLocation.from_s(first.s - n * h) for n in range(count)]

    period = period_zeros(a, params)
    zeros = [nth_zero(period, n, a) for n in range(count)]
    if target is ZeroTarget.DELTA:
        zeros = [map_zero_to_delta(zero) for zero in zeros]
    return zeros
