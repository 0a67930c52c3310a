"""
Конфигурация вычислений
"""
from typing import Tuple, Type

from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Численные настройки по умолчанию"""

    # Ряд f(x)
    EPS_TERM: float = 1e-18
    MAX_SERIES_TERMS: int = 200_000

    # Гармоники Γ(1 + 2kπi/log a)
    K_MAX: int = 1024
    HARMONIC_CUTOFF: float = 1e-18
    CHARACTER_CACHE_BASES: int = 64

    # Поиск нулей
    ROOT_XTOL: float = 1e-14
    ROOT_XTOL_DIRECT: float = 1e-11
    ROOT_MAXITER: int = 200
    SCAN_POINTS: int = 512

    # Оракул f - g
    ORACLE_MIN_W: float = 1e-8
    DIRECT_MIN_W: float = 1e-5
    ORACLE_NOISE_ULPS: int = 64

    # Таблица и вывод
    DECIMALS: int = 10
    MAX_TABLE_ROWS: int = 200

    # Development
    DEBUG: bool = False

    model_config = SettingsConfigDict(
        case_sensitive=True,
        frozen=True,
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # Только значения из кода и явные аргументы: ни окружения, ни файлов
        return (init_settings,)


# Глобальный экземпляр настроек
settings = Settings()
