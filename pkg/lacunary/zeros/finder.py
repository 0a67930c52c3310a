"""
Нули Δ₀ и Δ: фундаментальный нуль, лестница, уточнение и отображения
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from ..complexfn import check_base, gamma_character
from ..config import settings
from ..delta import delta_oracle, harmonic_sum_at, oracle_noise, r_sum_bound
from ..exceptions import ConvergenceError, DomainError, NoiseFloorError, NoSignChangeError
from ..series import SeriesParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroLocation:
    """
    Нуль, заданный расстоянием до единицы

    Attributes:
        s: ln w (основная координата)
        w: 1 - x; может обнулиться при очень малых s, тогда значим только s
    """

    s: float
    w: float

    def __post_init__(self):
        if not math.isfinite(self.s) or not (self.w >= 0.0):
            raise DomainError(f"invalid zero location s={self.s!r}, w={self.w!r}")

    @property
    def x(self) -> float:
        """x = 1 - w, только для вывода"""
        return -math.expm1(self.s)

    @classmethod
    def from_s(cls, s: float) -> "ZeroLocation":
        return cls(s=s, w=math.exp(s))

    @classmethod
    def from_w(cls, w: float) -> "ZeroLocation":
        if not math.isfinite(w) or w <= 0.0:
            raise DomainError(f"zero location requires w > 0, got {w!r}")
        return cls(s=math.log(w), w=w)


def half_period(a: float) -> float:
    """Расстояние (log a)/2 между соседними нулями по s"""
    return 0.5 * math.log(a)


def params_for(a: float, params: Optional[SeriesParams]) -> SeriesParams:
    if params is None:
        return SeriesParams.from_settings(a)
    if params.a != a:
        return params.model_copy(update={"a": a})
    return params


def _solve(func: Callable[[float], float], lo: float, hi: float, xtol: float) -> float:
    """
    Корень на интервале со сменой знака

    Raises:
        NoSignChangeError: f(lo)·f(hi) > 0
        ConvergenceError: превышен ROOT_MAXITER
    """
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoSignChangeError(f"no sign change on [{lo!r}, {hi!r}]: f={f_lo:.3e}, {f_hi:.3e}")

    root, result = brentq(
        func,
        lo,
        hi,
        xtol=xtol,
        maxiter=settings.ROOT_MAXITER,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise ConvergenceError(f"root finder stopped after {result.iterations} iterations on [{lo!r}, {hi!r}]")

    logger.debug(f"Root {root!r} in {result.iterations} iterations")
    return float(root)


def refine_zero_delta0(s_lo: float, s_hi: float, params: SeriesParams) -> ZeroLocation:
    """
    Уточнить нуль Δ₀ на интервале по координате s = ln w

    Знак Δ₀(e^s) совпадает со знаком суммы по характерам, её и решаем.

    Args:
        s_lo: Левая граница
        s_hi: Правая граница
        params: Параметры ряда

    Returns:
        ZeroLocation с шириной интервала <= ROOT_XTOL по s
    """
    if s_lo > s_hi:
        s_lo, s_hi = s_hi, s_lo
    root = _solve(lambda s: harmonic_sum_at(s, params), s_lo, s_hi, settings.ROOT_XTOL)
    return ZeroLocation.from_s(root)


def scan_sign_changes(s_lo: float, s_hi: float, params: SeriesParams, points: int) -> np.ndarray:
    """Левые концы ячеек сетки, на которых Δ₀ меняет знак"""
    grid = np.linspace(s_lo, s_hi, points)
    values = np.array([harmonic_sum_at(float(s), params) for s in grid])
    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] * signs[1:] <= 0)
    return grid[changes]


def period_zeros(a: float, params: Optional[SeriesParams] = None) -> List[ZeroLocation]:
    """
    Все нули Δ₀ с s ∈ (-log a, 0], по убыванию s

    w·Δ₀(w) периодична по s с периодом log a, так что любой нуль получается из
    этих сдвигом на целое число периодов. При доминирующей первой гармонике
    нулей в периоде два, при больших a их расположение неравномерно.

    Args:
        a: Основание, a > 1
        params: Параметры ряда

    Returns:
        Список ZeroLocation, первым идёт нуль, ближайший к w = 1

    Raises:
        NoSignChangeError: все характеры ушли в underflow и Δ₀ тождественно 0 в double
    """
    a = check_base(a)
    params = params_for(a, params)
    if r_sum_bound(params) == 0.0:
        raise NoSignChangeError(f"delta0 vanishes in double precision for a={a}: every character underflows")

    period = math.log(a)
    points = 2 * settings.SCAN_POINTS
    step = period / (points - 1)
    tolerance = 16.0 * settings.ROOT_XTOL

    zeros: List[ZeroLocation] = []
    for left in scan_sign_changes(-period, 0.0, params, points):
        zero = refine_zero_delta0(float(left), float(left) + step, params)
        if zero.s <= -period + tolerance:
            # образ нуля в s = 0
            continue
        if any(abs(zero.s - known.s) <= tolerance for known in zeros):
            continue
        zeros.append(zero)

    if not zeros:
        raise NoSignChangeError(f"no zero of delta0 on one period for a={a}")

    zeros.sort(key=lambda zero: zero.s, reverse=True)
    logger.debug(f"Zeros per period for a={a}: {len(zeros)}")
    return zeros


def nth_zero(zeros: Sequence[ZeroLocation], n: int, a: float) -> ZeroLocation:
    """n-й нуль Δ₀: нуль периода с номером n mod m, сдвинутый на n div m периодов"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"zero index must be an integer >= 0, got {n!r}")
    turns, index = divmod(n, len(zeros))
    if turns == 0:
        return zeros[index]
    return ZeroLocation.from_s(zeros[index].s - turns * math.log(a))


def reduce_to_window(s: float, a: float) -> float:
    """Сдвинуть s на целое число полупериодов в окно (-(log a)/2, 0]"""
    h = half_period(a)
    if -h < s <= 0.0:
        return s
    s = s - math.ceil(s / h) * h
    while s > 0.0:
        s -= h
    while s <= -h:
        s += h
    return s


def dominant_zero_s(a: float, m: int = -1) -> float:
    """
    Нуль доминирующей синусоиды cos(θ₁ s - arg Γ(1 + iθ₁)) = 0

    s_m = (arg Γ(1 + iθ₁) + π/2 + mπ)/θ₁; m = -1 даёт показатель из замкнутой формулы.
    """
    first = gamma_character(a, 1)
    return (first.arg + 0.5 * math.pi + m * math.pi) / first.theta


def closed_form_first_zero(a: float) -> ZeroLocation:
    """
    Оценка первого нуля по двум главным членам суммы

    x₀ ≈ 1 - exp((π/2 - arg Γ(1 + 2πi/log a))·log a / (-2π)), аргумент берётся
    с непрерывной ветви, результат приводится в окно w ∈ (a^(-1/2), 1].

    Args:
        a: Основание, a > 1

    Returns:
        ZeroLocation
    """
    a = check_base(a)
    return ZeroLocation.from_s(reduce_to_window(dominant_zero_s(a), a))


def fundamental_zero_delta0(a: float, params: Optional[SeriesParams] = None) -> ZeroLocation:
    """
    Фундаментальный нуль Δ₀: ближайший к w = 1 нуль с w <= 1

    Пока первая гармоника доминирует (a до нескольких десятков), это единственный
    нуль с w ∈ (a^(-1/2), 1). Для больших a окно может быть пустым или содержать
    несколько нулей, и берётся верхний нуль периода.

    Args:
        a: Основание, a > 1
        params: Параметры ряда

    Returns:
        ZeroLocation
    """
    zero = period_zeros(a, params)[0]
    logger.info(f"Fundamental zero for a={a}: w0={zero.w!r} (x0={zero.x!r})")
    return zero


def zero_ladder(w0: ZeroLocation, n: int, a: float) -> ZeroLocation:
    """
    Затравка n-го нуля: w = w0·a^(-n/2), вычисляется по s

    Args:
        w0: Фундаментальный нуль
        n: Номер ступени, n >= 0
        a: Основание

    Returns:
        ZeroLocation
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"ladder index must be an integer >= 0, got {n!r}")
    a = check_base(a)
    if n == 0:
        return w0
    return ZeroLocation.from_s(w0.s - n * half_period(a))


def map_zero_to_delta(w0: ZeroLocation) -> ZeroLocation:
    """
    Нуль Δ, соответствующий нулю Δ₀

    Δ(x) = Δ₀(log(1/x)), поэтому нулю Δ₀ в w₀ отвечает нуль Δ в x = e^(-w₀),
    то есть w = 1 - e^(-w₀) (через expm1, без потери точности при малых w₀).
    """
    if w0.w == 0.0:
        # w₀ ушёл в underflow: 1 - e^(-w₀) = w₀ с точностью double
        return ZeroLocation(s=w0.s, w=0.0)
    w = -math.expm1(-w0.w)
    return ZeroLocation(s=math.log(w), w=w)


def taylor_map_z_to_z0(wz: float) -> float:
    """(1 - x_z0) ≈ (1 - x_z) + (1 - x_z)²/2 + (1 - x_z)³/3"""
    _check_unit(wz)
    return wz + wz * wz / 2.0 + wz ** 3 / 3.0


def taylor_map_z0_to_z(wz0: float, as_printed: bool = False) -> float:
    """
    Обратное кубическое отображение

    Согласованный с 1 - e^(-w) вариант: w - w²/2 + w³/6. При as_printed=True
    кубический член берётся как -w³/3 (такая запись точна только до w²).
    """
    _check_unit(wz0)
    cubic = -wz0 ** 3 / 3.0 if as_printed else wz0 ** 3 / 6.0
    return wz0 - wz0 * wz0 / 2.0 + cubic


def _check_unit(w: float):
    if not math.isfinite(w) or not (0.0 < w < 1.0):
        raise DomainError(f"Taylor maps require 0 < w < 1, got {w!r}")


def find_zero_delta_direct(x_lo: float, x_hi: float, params: SeriesParams) -> ZeroLocation:
    """
    Нуль Δ по прямому оракулу f - g

    Args:
        x_lo: Левая граница
        x_hi: Правая граница, 1 - x_hi >= DIRECT_MIN_W
        params: Параметры ряда

    Returns:
        ZeroLocation с точностью ROOT_XTOL_DIRECT по x

    Raises:
        NoiseFloorError: интервал слишком близко к 1 или значения на концах в пределах шума
        NoSignChangeError: нет смены знака
    """
    if x_lo > x_hi:
        x_lo, x_hi = x_hi, x_lo
    if not (0.0 < x_lo < x_hi < 1.0):
        raise DomainError(f"bracket must lie in (0, 1), got [{x_lo!r}, {x_hi!r}]")
    if 1.0 - x_hi < settings.DIRECT_MIN_W:
        raise NoiseFloorError(f"1 - x_hi = {1.0 - x_hi:.3e} is below the oracle floor {settings.DIRECT_MIN_W:.0e}")

    f_lo = delta_oracle(x_lo, params)
    f_hi = delta_oracle(x_hi, params)
    noise = max(oracle_noise(x_lo, params), oracle_noise(x_hi, params))
    if max(abs(f_lo), abs(f_hi)) < noise:
        raise NoiseFloorError(f"oracle values {f_lo:.3e}, {f_hi:.3e} are within noise {noise:.3e}")

    root = _solve(lambda x: delta_oracle(x, params), x_lo, x_hi, settings.ROOT_XTOL_DIRECT)
    return ZeroLocation.from_w(1.0 - root)
