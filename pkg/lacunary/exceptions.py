"""
Исключения библиотеки
"""


class LacunaryError(Exception):
    """Базовая ошибка вычислений"""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def reason(self) -> str:
        """Однострочное машиночитаемое описание: '<code>: <message>'"""
        return f"{self.code}: {self.message}"


class DomainError(LacunaryError, ValueError):
    """Аргумент вне области определения"""

    code = "domain"


class GammaOverflowError(LacunaryError, OverflowError):
    """Переполнение sinh(πy) в точной формуле модуля"""

    code = "overflow"


class NoSignChangeError(LacunaryError, ValueError):
    """На концах интервала нет смены знака"""

    code = "no-sign-change"


class ConvergenceError(LacunaryError, RuntimeError):
    """Итерации не сошлись за отведённый лимит"""

    code = "non-convergence"


class NoiseFloorError(LacunaryError, ValueError):
    """Значения оракула f - g неотличимы от шума округления"""

    code = "noise-floor"
