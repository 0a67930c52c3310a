"""
Общие фикстуры
"""
import pytest

from lacunary.series import SeriesParams


@pytest.fixture
def params2() -> SeriesParams:
    return SeriesParams.from_settings(2.0)


@pytest.fixture
def params3() -> SeriesParams:
    return SeriesParams.from_settings(3.0)
