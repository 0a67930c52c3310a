"""
Осциллирующий остаток Δ(x) = f(x) - g(x) и самоподобное приближение Δ₀
"""
import logging
import math
from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict

from ..complexfn import GammaCharacter, check_base, gamma_character, harmonic_characters
from ..config import settings
from ..exceptions import DomainError
from ..series import SeriesParams, f_of_u, g_of_u, log_inv

logger = logging.getLogger(__name__)

# Знак суммы по характерам: Δ = +(1/((log a)·u))·Σ' Γ(1 + iθ_k)·u^(-iθ_k)
REMAINDER_SIGN = 1.0


class Route(str, Enum):
    """Способ вычисления Δ"""

    ORACLE = "oracle"
    GAMMA_SUM = "gamma_sum"
    DELTA0_AT_W = "delta0_at_w"
    DOMINANT = "dominant"


class RemainderSample(BaseModel):
    """Значение остатка в точке x"""

    model_config = ConfigDict(frozen=True)

    x: float
    u: float
    w: float
    delta: float
    route: Route


class DominantParams(BaseModel):
    """Параметры доминирующей синусоиды (b/w)·cos(theta_1·ln w + phi)"""

    model_config = ConfigDict(frozen=True)

    b: float
    phi: float
    theta_1: float


def _harmonics(params: SeriesParams) -> List[GammaCharacter]:
    return harmonic_characters(params.a, params.k_max, params.harmonic_cutoff)


def harmonic_sum_at(log_u: float, params: SeriesParams) -> float:
    """
    2·Σ_{k>=1} Re[Γ(1 + iθ_k)·exp(-iθ_k·log_u)] при заданном ln u

    Слагаемые k и -k сопряжены, поэтому берётся удвоенная вещественная часть.
    """
    terms = [ch.modulus * math.cos(ch.phase - ch.theta * log_u) for ch in _harmonics(params)]
    return 2.0 * math.fsum(terms)


def r_sum(u: float, params: SeriesParams) -> float:
    """
    Сумма по ненулевым гармоникам Σ' Γ(1 + iθ_k)·u^(-iθ_k)

    Args:
        u: Положительный аргумент (log(1/x) или 1 - x)
        params: Параметры ряда

    Returns:
        Вещественное значение суммы

    Raises:
        DomainError: u <= 0
    """
    if not math.isfinite(u) or u <= 0.0:
        raise DomainError(f"r_sum requires u > 0, got {u!r}")
    return harmonic_sum_at(math.log(u), params)


def r_sum_bound(params: SeriesParams) -> float:
    """Оценка |r_sum| <= 2·Σ|Γ(1 + iθ_k)|"""
    return 2.0 * math.fsum(ch.modulus for ch in _harmonics(params))


def delta0(w: float, params: SeriesParams) -> float:
    """
    Самоподобная функция Δ₀(w) = r_sum(w) / ((log a)·w), w = 1 - x

    Значения w >= 1 допустимы: формула определена и нужна для нулей при малых x.

    Args:
        w: Расстояние до единицы, w > 0
        params: Параметры ряда

    Returns:
        Δ₀(w)
    """
    if not math.isfinite(w) or w <= 0.0:
        raise DomainError(f"delta0 requires w > 0, got {w!r}")
    return REMAINDER_SIGN * r_sum(w, params) / (math.log(params.a) * w)


def delta_of_x(x: float, params: SeriesParams) -> float:
    """
    Остаток Δ(x) через сумму по характерам

    Подстановка w -> log(1/x) превращает Δ₀ ровно в Δ, поэтому путь вычисления общий.
    """
    return delta0(log_inv(x), params)


def delta_oracle(x: float, params: SeriesParams) -> float:
    """
    Прямой оракул Δ(x) = f(x) - g(x)

    При w = 1 - x < ORACLE_MIN_W результат теряет точность из-за вычитания
    близких больших величин; в этом случае пишется предупреждение в лог.
    """
    u = log_inv(x)
    w = 1.0 - x
    if w < settings.ORACLE_MIN_W:
        logger.warning(f"delta_oracle near x=1 (w={w:.3e}): cancellation noise ~1e-11*g(x)")
    return f_of_u(u, params) - g_of_u(u, params.a)


def oracle_noise(x: float, params: SeriesParams) -> float:
    """Оценка абсолютного шума оракула: ORACLE_NOISE_ULPS ulp от g(x)"""
    return settings.ORACLE_NOISE_ULPS * math.ulp(g_of_u(log_inv(x), params.a))


def dominant_params(a: float) -> DominantParams:
    """
    Параметры гармоник k = ±1

    b = 2|Γ(1 + iθ₁)|/log a, phi = -arg Γ(1 + iθ₁).

    Args:
        a: Основание, a > 1

    Returns:
        DominantParams
    """
    a = check_base(a)
    first = gamma_character(a, 1)
    return DominantParams(
        b=2.0 * first.modulus / math.log(a),
        phi=-first.phase,
        theta_1=first.theta,
    )


def delta0_dominant(w: float, params: SeriesParams) -> float:
    """Доминирующая синусоида (b/w)·cos(theta_1·ln w + phi)"""
    if not math.isfinite(w) or w <= 0.0:
        raise DomainError(f"delta0_dominant requires w > 0, got {w!r}")
    dominant = dominant_params(params.a)
    return REMAINDER_SIGN * dominant.b / w * math.cos(dominant.theta_1 * math.log(w) + dominant.phi)


def sample_remainder(x: float, route: Route, params: SeriesParams) -> RemainderSample:
    """
    Вычислить остаток в точке x выбранным способом

    Args:
        x: Точка, 0 < x < 1
        route: Способ вычисления
        params: Параметры ряда

    Returns:
        RemainderSample
    """
    u = log_inv(x)
    w = 1.0 - x
    route = Route(route)

    if route is Route.ORACLE:
        value = delta_oracle(x, params)
    elif route is Route.GAMMA_SUM:
        value = delta_of_x(x, params)
    elif route is Route.DELTA0_AT_W:
        value = delta0(w, params)
    else:
        value = delta0_dominant(w, params)

    return RemainderSample(x=x, u=u, w=w, delta=value, route=route)
