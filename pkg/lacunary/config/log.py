"""
Настройка логирования
"""
import logging

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(debug: bool = False):
    """Логи в stderr: INFO в режиме отладки, иначе WARNING"""
    logging.basicConfig(
        level=logging.INFO if debug else logging.WARNING,
        format=LOG_FORMAT,
        force=True,
    )
