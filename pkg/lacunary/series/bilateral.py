"""
Двусторонний лакунарный ряд f(x) = Σ aⁿ x^(aⁿ) и гладкая часть g(x)
"""
import math
from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..complexfn import check_base
from ..config import Settings, settings
from ..exceptions import ConvergenceError, DomainError


class SeriesParams(BaseModel):
    """Параметры вычисления рядов"""

    model_config = ConfigDict(frozen=True)

    a: float = Field(gt=1.0)
    eps_term: float = Field(default=1e-18, gt=0.0, lt=1e-6)
    k_max: int = Field(default=1024, ge=1)
    harmonic_cutoff: float = Field(default=1e-18, gt=0.0, lt=1e-6)
    max_terms: int = Field(default=200_000, ge=16)

    @field_validator("a")
    @classmethod
    def _finite_base(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("base a must be finite")
        return value

    @classmethod
    def from_settings(cls, a: float, config: Settings = settings, **overrides) -> "SeriesParams":
        """Собрать параметры из глобальных настроек"""
        values = {
            "a": a,
            "eps_term": config.EPS_TERM,
            "k_max": config.K_MAX,
            "harmonic_cutoff": config.HARMONIC_CUTOFF,
            "max_terms": config.MAX_SERIES_TERMS,
        }
        values.update(overrides)
        return cls(**values)


def log_inv(x: float) -> float:
    """
    u = log(1/x) для 0 < x < 1

    Raises:
        DomainError: x вне (0, 1)
    """
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"x must be a real number, got {x!r}") from None
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return -math.log(x)


def term_limit(u: float, params: SeriesParams) -> int:
    """
    Предел числа членов в каждом направлении

    Нижний хвост обрывается при a^(-m) < eps·(a - 1)·f, поэтому нужно порядка
    (ln(1/eps) + |ln(a - 1)| + |ln u|)/ln a членов; при a -> 1 это больше любого
    фиксированного max_terms, и он служит только нижней границей.
    """
    log_a = math.log(params.a)
    needed = (
        math.log(1.0 / params.eps_term)
        + abs(math.log(params.a - 1.0))
        + abs(math.log(u))
        + math.log(max(1.0, log_a))
        + 8.0
    ) / log_a
    return max(params.max_terms, math.ceil(needed) + 16)


def f_of_u(u: float, params: SeriesParams) -> float:
    """
    Сумма Σ aⁿ exp(-aⁿ u) по всем целым n

    Хвосты отсекаются по строгим оценкам: для n < 0 остаток не больше
    a^(-m)/(a - 1), для n >= 0 после пика остаток не больше t·r/(1 - r),
    где r = a·exp(-(a - 1)·aⁿ·u) есть отношение соседних членов.

    Args:
        u: log(1/x) > 0
        params: Параметры ряда

    Returns:
        f как функция u
    """
    if not math.isfinite(u) or u <= 0.0:
        raise DomainError(f"u = log(1/x) must be positive, got {u!r}")

    a = params.a
    eps = params.eps_term
    limit = term_limit(u, params)
    terms: List[float] = []
    running = 0.0

    # n < 0: члены ограничены a^(-m)
    tail_factor = 1.0 / (a - 1.0)
    m = 1
    while True:
        p = a ** (-m)
        term = p * math.exp(-p * u)
        terms.append(term)
        running += term
        if p * tail_factor < eps * running:
            break
        m += 1
        if m > limit:
            raise ConvergenceError(f"downward series did not converge within {limit} terms (a={a})")

    # n >= 0: рост до пика aⁿu ~ 1, затем двойное экспоненциальное убывание
    n = 0
    while True:
        p = a ** n
        pu = p * u
        term = p * math.exp(-pu)
        terms.append(term)
        running += term
        if pu > 1.0:
            ratio = a * math.exp(-(a - 1.0) * pu)
            if ratio < 1.0 and term * ratio / (1.0 - ratio) < eps * running:
                break
        n += 1
        if n > limit:
            raise ConvergenceError(f"upward series did not converge within {limit} terms (a={a})")

    return math.fsum(terms)


def f_bilateral(x: float, params: SeriesParams) -> float:
    """
    Двусторонний ряд f(x) = Σ_{n∈Z} aⁿ x^(aⁿ)

    Args:
        x: Точка, 0 < x < 1
        params: Параметры ряда

    Returns:
        f(x) > 0

    Raises:
        DomainError: x вне (0, 1)
    """
    return f_of_u(log_inv(x), params)


def g_of_u(u: float, a: float) -> float:
    """g как функция u = log(1/x): 1/((log a)·u)"""
    if not math.isfinite(u) or u <= 0.0:
        raise DomainError(f"u = log(1/x) must be positive, got {u!r}")
    return 1.0 / (math.log(a) * u)


def g_ref(x: float, a: float) -> float:
    """
    Гладкая часть g(x) = 1/((log a)·log(1/x))

    Args:
        x: Точка, 0 < x < 1
        a: Основание, a > 1

    Returns:
        g(x) > 0
    """
    a = check_base(a)
    return g_of_u(log_inv(x), a)
