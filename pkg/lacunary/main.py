"""
Точка входа
"""
import sys

from .cli import run
from .config import settings, setup_logging


def main():
    """Запуск CLI"""
    setup_logging(settings.DEBUG)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
