"""
Командная строка
"""
from .commands import LacunaryGroup, cli, run
from .formatting import Column, Notation, OutputFormat, OutputKind, format_value, render, render_csv, render_json

__all__ = [
    "Column",
    "LacunaryGroup",
    "Notation",
    "OutputFormat",
    "OutputKind",
    "cli",
    "format_value",
    "render",
    "render_csv",
    "render_json",
    "run",
]
