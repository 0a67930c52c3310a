"""
Модуль конфигурации
"""
from .log import setup_logging
from .settings import settings, Settings

__all__ = ["settings", "Settings", "setup_logging"]
