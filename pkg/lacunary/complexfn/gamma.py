"""
Комплексная гамма-функция на прямой Re z = 1 и характеры Γ(1 + 2kπi/log a)
"""
import cmath
import logging
import math
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from mpmath.ctx_mp import MPContext

from ..config import settings
from ..exceptions import DomainError, GammaOverflowError

logger = logging.getLogger(__name__)

# Коэффициенты Ланцоша, g = 607/128 (сдвиг g + 1/2 = 671/128)
_LANCZOS_SHIFT = 5.2421875
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COEFFS = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005

# Собственный контекст: глобальный mpmath.mp может менять вызывающий код
_MP = MPContext()
_MP.prec = 113


def log_gamma(z: complex) -> complex:
    """
    Логарифм гамма-функции для Re z >= 0.5

    Мнимая часть берётся на ветви, непрерывной вдоль вертикальной прямой
    и проходящей через log Γ(1) = 0 (без приведения по модулю 2π).

    Args:
        z: Комплексный аргумент, Re z >= 0.5

    Returns:
        log Γ(z)

    Raises:
        DomainError: Re z < 0.5 или нечисловые компоненты
    """
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainError(f"log_gamma argument must be finite, got {z!r}")
    if z.real < 0.5:
        raise DomainError(f"log_gamma requires Re z >= 0.5, got {z!r}")

    ser = complex(_LANCZOS_C0)
    y = z
    for coeff in _LANCZOS_COEFFS:
        y += 1.0
        ser += coeff / y
    correction = cmath.log(_SQRT_2PI * ser / z)

    # Главный член порядка |z|·log|z| в double теряет до 3e-13 при |Im z| ~ 200;
    # считаем его с 113 битами и округляем сумму один раз
    zm = _MP.mpc(z.real, z.imag)
    shifted = zm + _MP.mpf(_LANCZOS_SHIFT)
    total = (zm + _MP.mpf(0.5)) * _MP.log(shifted) - shifted + _MP.mpc(correction.real, correction.imag)
    return complex(total)


def gamma_modulus_exact(y: float) -> float:
    """
    Точный модуль |Γ(1 + iy)| = sqrt(πy / sinh(πy))

    Args:
        y: Мнимая часть, y > 0

    Returns:
        Модуль, строго положительный

    Raises:
        DomainError: y <= 0 или не число
        GammaOverflowError: sinh(πy) не помещается в double
    """
    if not math.isfinite(y) or y <= 0:
        raise DomainError(f"gamma_modulus_exact requires y > 0, got {y!r}")

    arg = math.pi * y
    try:
        denominator = math.sinh(arg)
    except OverflowError:
        raise GammaOverflowError(f"sinh(pi*y) overflows for y = {y!r}") from None

    return math.sqrt(arg / denominator)


def check_base(a: float) -> float:
    """Проверить основание a > 1 и вернуть его как float"""
    try:
        a = float(a)
    except (TypeError, ValueError):
        raise DomainError(f"base a must be a real number, got {a!r}") from None
    if not math.isfinite(a) or a <= 1.0:
        raise DomainError(f"base a must satisfy a > 1, got {a!r}")
    return a


@dataclass(frozen=True)
class GammaCharacter:
    """
    Характер Γ(1 + i·theta) для гармоники k

    Attributes:
        k: Номер гармоники (k >= 1; k < 0 получается сопряжением)
        theta: 2kπ / log a
        value: Γ(1 + i·theta)
        modulus: |value|
        phase: Главное значение аргумента, (-π, π]
        arg: Непрерывный аргумент (мнимая часть log_gamma)
    """

    k: int
    theta: float
    value: complex
    modulus: float
    phase: float
    arg: float

    @classmethod
    def compute(cls, a: float, k: int) -> "GammaCharacter":
        theta = 2.0 * math.pi * k / math.log(a)
        log_value = log_gamma(complex(1.0, theta))

        modulus = math.exp(log_value.real)
        if modulus == 0.0:
            logger.warning(f"Character modulus underflows: a={a}, k={k}, log|Γ|={log_value.real:.3f}")

        phase = math.remainder(log_value.imag, 2.0 * math.pi)
        if phase <= -math.pi:
            phase = math.pi

        return cls(
            k=k,
            theta=theta,
            value=cmath.exp(log_value),
            modulus=modulus,
            phase=phase,
            arg=log_value.imag,
        )


@dataclass
class _BaseEntry:
    characters: Dict[int, GammaCharacter] = field(default_factory=dict)
    harmonics: Dict[Tuple[int, float], Tuple[GammaCharacter, ...]] = field(default_factory=dict)


class CharacterTable:
    """
    Потокобезопасный кэш характеров по основанию a

    Хранится не больше max_bases оснований; при переполнении вытесняется то,
    к которому дольше всего не обращались.
    """

    def __init__(self, max_bases: int = 64):
        if max_bases < 1:
            raise DomainError(f"max_bases must be >= 1, got {max_bases!r}")
        self._lock = threading.Lock()
        self._max_bases = max_bases
        self._bases: "OrderedDict[float, _BaseEntry]" = OrderedDict()

    def __len__(self) -> int:
        with self._lock:
            return len(self._bases)

    def _entry(self, a: float) -> _BaseEntry:
        # вызывается под self._lock
        entry = self._bases.get(a)
        if entry is not None:
            self._bases.move_to_end(a)
            return entry

        entry = self._bases[a] = _BaseEntry()
        while len(self._bases) > self._max_bases:
            evicted, _ = self._bases.popitem(last=False)
            logger.debug(f"Evicted characters for a={evicted}")
        return entry

    def get(self, a: float, k: int) -> GammaCharacter:
        """Получить (или вычислить и запомнить) характер"""
        with self._lock:
            cached = self._entry(a).characters.get(k)
        if cached is not None:
            return cached

        character = GammaCharacter.compute(a, k)
        with self._lock:
            return self._entry(a).characters.setdefault(k, character)

    def harmonics(self, a: float, k_max: int, cutoff: float) -> Tuple[GammaCharacter, ...]:
        """
        Характеры, участвующие в суммах

        Гармоника k = 1 входит всегда; дальше перебор идёт, пока модуль
        не опустится ниже cutoff (модули строго убывают по k), но не дальше k_max.
        """
        key = (k_max, cutoff)
        with self._lock:
            cached = self._entry(a).harmonics.get(key)
        if cached is not None:
            return cached

        result: List[GammaCharacter] = [self.get(a, 1)]
        for k in range(2, k_max + 1):
            character = self.get(a, k)
            if character.modulus < cutoff:
                break
            result.append(character)

        logger.debug(f"Harmonics for a={a}: {len(result)} (cutoff={cutoff}, k_max={k_max})")

        with self._lock:
            return self._entry(a).harmonics.setdefault(key, tuple(result))

    def clear(self):
        """Очистить кэш"""
        with self._lock:
            self._bases.clear()


# Singleton экземпляр
characters = CharacterTable(settings.CHARACTER_CACHE_BASES)


def gamma_character(a: float, k: int) -> GammaCharacter:
    """
    Характер Γ(1 + 2kπi/log a)

    Args:
        a: Основание, a > 1
        k: Номер гармоники, k >= 1

    Returns:
        GammaCharacter

    Raises:
        DomainError: a <= 1 или k < 1
    """
    a = check_base(a)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"harmonic index k must be an integer >= 1, got {k!r}")
    return characters.get(a, k)


def harmonic_characters(a: float, k_max: int, cutoff: float) -> List[GammaCharacter]:
    """
    Список характеров k = 1, 2, ... до отсечки по модулю

    Args:
        a: Основание, a > 1
        k_max: Жёсткий предел номера гармоники
        cutoff: Порог модуля

    Returns:
        Характеры в порядке возрастания k
    """
    a = check_base(a)
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max!r}")
    return list(characters.harmonics(a, k_max, cutoff))
