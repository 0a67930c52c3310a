"""
Тесты лакунарного ряда и гладкой части
"""
import math

import mpmath
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from lacunary.exceptions import DomainError
from lacunary.series import SeriesParams, f_bilateral, f_of_u, g_of_u, g_ref, log_inv, term_limit


def bilateral_reference(x: float, a: float) -> float:
    """Прямая сумма при 40 знаках: 400 членов вниз и до полного затухания вверх"""
    with mpmath.workdps(40):
        a_mp = mpmath.mpf(a)
        u = -mpmath.log(mpmath.mpf(x))
        total = mpmath.mpf(0)
        for n in range(-400, 200):
            p = a_mp ** n
            term = p * mpmath.exp(-p * u)
            total += term
            if n > 0 and term < mpmath.mpf(10) ** -60:
                break
        return float(total)


def test_g_at_inverse_e():
    assert g_ref(math.exp(-1.0), 2) == pytest.approx(1.4426950409, abs=1e-10)


def test_g_at_half():
    assert g_ref(0.5, 2) == pytest.approx(2.0813689810, abs=1e-10)


@pytest.mark.parametrize("x", [0.5, 0.1, 0.9, 0.99])
def test_f_matches_reference_base_2(x, params2):
    assert f_bilateral(x, params2) == pytest.approx(bilateral_reference(x, 2.0), rel=1e-14)


@pytest.mark.parametrize("a, x", [(3.0, 0.5), (1.5, 0.7), (10.0, 0.2)])
def test_f_matches_reference_other_bases(a, x):
    params = SeriesParams.from_settings(a)
    assert f_bilateral(x, params) == pytest.approx(bilateral_reference(x, a), rel=1e-13)


def test_f_is_close_to_g(params2):
    # |f - g| мал по сравнению с g: остаток порядка 1e-5·g
    for x in (0.3, 0.5, 0.8, 0.95):
        f = f_bilateral(x, params2)
        g = g_ref(x, 2.0)
        assert abs(f - g) < 2e-5 * g


@hsettings(max_examples=50, deadline=None)
@given(
    a=st.floats(min_value=1.5, max_value=5.0),
    u=st.floats(min_value=0.01, max_value=5.0),
)
def test_f_scaling(a, u):
    # f(x^a) = f(x)/a, то есть f(a·u) = f(u)/a
    params = SeriesParams.from_settings(a)
    assert f_of_u(a * u, params) == pytest.approx(f_of_u(u, params) / a, rel=1e-13)


@hsettings(max_examples=50, deadline=None)
@given(u=st.floats(min_value=1e-6, max_value=50.0))
def test_f_is_positive(u):
    params = SeriesParams.from_settings(2.0)
    assert f_of_u(u, params) > 0.0


def test_g_of_u_matches_g_ref():
    u = log_inv(0.3)
    assert g_of_u(u, 2.0) == g_ref(0.3, 2.0)


@pytest.mark.parametrize("x", [0.0, 1.0, -0.5, 1.5, math.nan, math.inf, "abc", None])
def test_log_inv_domain(x):
    with pytest.raises(DomainError):
        log_inv(x)


@pytest.mark.parametrize("u", [0.0, -1.0, math.nan])
def test_f_of_u_domain(u, params2):
    with pytest.raises(DomainError):
        f_of_u(u, params2)


def test_g_ref_rejects_bad_base():
    with pytest.raises(DomainError):
        g_ref(0.5, 1.0)


def test_term_limit_grows_near_one():
    params = SeriesParams(a=1.0001, max_terms=16)
    assert term_limit(0.5, params) > 400_000
    assert term_limit(0.5, SeriesParams(a=2.0)) == SeriesParams(a=2.0).max_terms


@pytest.mark.parametrize("a", [1.0001, 1.001])
def test_f_near_unit_base(a):
    # Гармоники исчезают в double, так что f совпадает с g до ошибок суммирования
    params = SeriesParams.from_settings(a, max_terms=16)
    assert f_bilateral(0.5, params) == pytest.approx(g_ref(0.5, a), rel=1e-10)


def test_f_near_unit_base_value():
    params = SeriesParams.from_settings(1.001)
    assert f_bilateral(0.5, params) == pytest.approx(1443.416, abs=1e-3)


GRID = [0.05 * i for i in range(1, 20)]


@pytest.mark.parametrize("a", [2.0, 3.0, math.e, 10.0])
def test_functional_equation_on_grid(a):
    params = SeriesParams.from_settings(a)
    for x in GRID:
        assert a * f_bilateral(x ** a, params) == pytest.approx(f_bilateral(x, params), rel=1e-13)


@pytest.mark.parametrize("a", [2.0, 3.0, math.e, 10.0])
def test_g_scaling(a):
    for x in GRID:
        assert a * g_ref(x ** a, a) == pytest.approx(g_ref(x, a), rel=1e-13)


def test_truncation_stability(params2):
    halved = params2.model_copy(update={"eps_term": params2.eps_term / 2.0})
    for x in GRID:
        assert f_bilateral(x, halved) == pytest.approx(f_bilateral(x, params2), rel=1e-14)


def test_f_is_increasing(params2):
    values = [f_bilateral(x, params2) for x in GRID]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_remainder_amplitude_base_2(params2):
    amplitudes = [abs(f_bilateral(x, params2) - g_ref(x, 2.0)) for x in [0.1 + 0.01 * i for i in range(81)]]
    assert max(amplitudes) <= 5e-4
    assert max(amplitudes) >= 1e-6
