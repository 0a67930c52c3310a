"""
Форматирование вывода CLI (CSV и JSON)
"""
import csv
import io
import json
from enum import Enum
from typing import Any, Dict, List, Sequence

from pydantic import BaseModel, ConfigDict, Field


class OutputKind(str, Enum):
    """Формат вывода"""

    CSV = "csv"
    JSON = "json"


class Notation(str, Enum):
    """Запись чисел: фиксированная точка или экспонента"""

    FIXED = "fixed"
    SCIENTIFIC = "scientific"


class OutputFormat(BaseModel):
    """Параметры вывода"""

    model_config = ConfigDict(frozen=True)

    kind: OutputKind = OutputKind.CSV
    decimals: int = Field(default=10, ge=1, le=17)


class Column(BaseModel):
    """Колонка таблицы вывода"""

    model_config = ConfigDict(frozen=True)

    name: str
    notation: Notation = Notation.FIXED
    decimals: int = Field(default=10, ge=0, le=17)
    integer: bool = False


def format_value(value: Any, column: Column) -> str:
    """
    Отформатировать число для колонки

    Example:
        >>> format_value(2.0813689810056077, Column(name="g"))
        '2.0813689810'
    """
    if column.integer:
        return str(int(value))
    if column.notation is Notation.SCIENTIFIC:
        return f"{value:.{column.decimals}e}"
    return f"{value:.{column.decimals}f}"


def render_csv(columns: Sequence[Column], rows: Sequence[Dict[str, Any]], header: bool = True) -> str:
    """CSV с LF-переводами строк и точкой как десятичным разделителем"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow([column.name for column in columns])
    for row in rows:
        writer.writerow([format_value(row[column.name], column) for column in columns])
    return buffer.getvalue()


def render_json(columns: Sequence[Column], rows: Sequence[Dict[str, Any]], meta: Dict[str, Any]) -> str:
    """
    JSON: полные значения (repr, до 17 знаков) и строки для отображения

    Returns:
        Документ {"meta": ..., "columns": [...], "rows": [...], "display": [...]}
    """
    names = [column.name for column in columns]
    values: List[Dict[str, Any]] = [{name: row[name] for name in names} for row in rows]
    display: List[Dict[str, str]] = [
        {column.name: format_value(row[column.name], column) for column in columns} for row in rows
    ]
    document = {"meta": meta, "columns": names, "rows": values, "display": display}
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render(
    output: OutputFormat,
    columns: Sequence[Column],
    rows: Sequence[Dict[str, Any]],
    meta: Dict[str, Any],
    header: bool = True,
) -> str:
    """Вывести строки в выбранном формате"""
    if output.kind is OutputKind.JSON:
        return render_json(columns, rows, meta)
    return render_csv(columns, rows, header=header)
