"""
Лакунарный ряд f(x) и функция g(x)
"""
from .bilateral import SeriesParams, f_bilateral, f_of_u, g_of_u, g_ref, log_inv, term_limit

__all__ = ["SeriesParams", "f_bilateral", "f_of_u", "g_of_u", "g_ref", "log_inv", "term_limit"]
