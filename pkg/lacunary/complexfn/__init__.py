"""
Комплексная гамма-функция
"""
from .gamma import (
    CharacterTable,
    GammaCharacter,
    characters,
    check_base,
    gamma_character,
    gamma_modulus_exact,
    harmonic_characters,
    log_gamma,
)

__all__ = [
    "CharacterTable",
    "GammaCharacter",
    "characters",
    "check_base",
    "gamma_character",
    "gamma_modulus_exact",
    "harmonic_characters",
    "log_gamma",
]
