"""
Командная строка: eval, zeros, table, sweep, characters
"""
import logging
from typing import Any, Dict, List, Optional, Sequence

import click
from pydantic import ValidationError

from ..complexfn import check_base, gamma_character, harmonic_characters
from ..config import Settings, settings as default_settings
from ..delta import delta0, delta0_dominant, delta_of_x, delta_oracle, sweep
from ..exceptions import DomainError, LacunaryError
from ..series import SeriesParams, f_bilateral, g_ref
from ..zeros import ZeroTarget, build_table, list_zeros
from .formatting import Column, Notation, OutputFormat, OutputKind, render

logger = logging.getLogger(__name__)

EVAL_TARGETS = ("f", "g", "delta", "delta0", "dominant", "oracle")

# Ниже этого w строки таблицы печатаются и в форме w/s
W_FORM_THRESHOLD = 1e-12


class LacunaryGroup(click.Group):
    """
    Группа команд с единым разбором ошибок

    LacunaryError -> код 1 и строка 'error: <code>: <message>' в stderr,
    ошибки валидации pydantic -> ошибка использования (код 2).
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except LacunaryError as exc:
            logger.debug(f"Command failed: {exc.reason()}", exc_info=True)
            click.echo(f"error: {exc.reason()}", err=True)
            ctx.exit(1)
        except ValidationError as exc:
            raise click.UsageError(_validation_message(exc), ctx=ctx) from None


def _validation_message(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"]) or "value"
    return f"invalid {location}: {error['msg']}"


def _overrides(eps: Optional[float], kmax: Optional[int], decimals: Optional[int]) -> Dict[str, Any]:
    values = {"EPS_TERM": eps, "K_MAX": kmax, "DECIMALS": decimals}
    return {key: value for key, value in values.items() if value is not None}


def numeric_options(func):
    """--eps, --kmax, --decimals: принимаются и до, и после имени команды"""
    options = [
        click.option("--eps", type=float, default=None, help="Порог отсечения членов ряда (1e-18)"),
        click.option("--kmax", type=click.IntRange(min=1), default=None, help="Число гармоник (1024)"),
        click.option("--decimals", type=click.IntRange(1, 17), default=None, help="Знаков после точки (10)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([kind.value for kind in OutputKind]),
        default=OutputKind.CSV.value,
        show_default=True,
    )(func)


def _resolve(ctx: click.Context, eps: Optional[float], kmax: Optional[int], decimals: Optional[int]) -> Settings:
    """Настройки группы, дополненные флагами подкоманды"""
    base = ctx.find_object(Settings) or default_settings
    overrides = _overrides(eps, kmax, decimals)
    if not overrides:
        return base
    return Settings(**{**base.model_dump(), **overrides})


def _params(config: Settings, a: float) -> SeriesParams:
    return SeriesParams.from_settings(check_base(a), config)


def _emit(
    config: Settings,
    fmt: str,
    columns: Sequence[Column],
    rows: List[Dict[str, Any]],
    meta: Dict[str, Any],
    header: bool = True,
):
    output = OutputFormat(kind=OutputKind(fmt), decimals=config.DECIMALS)
    click.echo(render(output, columns, rows, meta, header=header), nl=False)


def _fixed(name: str, config: Settings) -> Column:
    return Column(name=name, notation=Notation.FIXED, decimals=config.DECIMALS)


def _scientific(name: str, config: Settings) -> Column:
    return Column(name=name, notation=Notation.SCIENTIFIC, decimals=config.DECIMALS)


def _integer(name: str) -> Column:
    return Column(name=name, integer=True)


@click.group(cls=LacunaryGroup)
@numeric_options
@click.option("-v", "--verbose", is_flag=True, help="Журнал уровня INFO в stderr")
@click.pass_context
def cli(ctx: click.Context, eps: Optional[float], kmax: Optional[int], decimals: Optional[int], verbose: bool):
    """Лакунарный ряд Σ aⁿ x^(aⁿ): остаток Δ, функция Δ₀ и их нули"""
    overrides = _overrides(eps, kmax, decimals)
    if verbose:
        overrides["DEBUG"] = True
        # Обработчики ставит main; здесь только понижаем порог для пакета
        logging.getLogger("lacunary").setLevel(logging.INFO)
    ctx.obj = Settings(**overrides)


@cli.command("eval")
@click.option("--a", "a", type=float, required=True, help="Основание a > 1")
@click.option("--x", "x", type=float, required=True, help="Точка")
@click.option("--what", type=click.Choice(EVAL_TARGETS), default="delta", show_default=True)
@numeric_options
@format_option
@click.pass_context
def eval_command(ctx, a, x, what, eps, kmax, decimals, fmt):
    """Значение f, g, Δ, Δ₀, доминирующей синусоиды или оракула f - g в точке x"""
    config = _resolve(ctx, eps, kmax, decimals)
    params = _params(config, a)
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")

    if what == "f":
        value = f_bilateral(x, params)
    elif what == "g":
        value = g_ref(x, params.a)
    elif what == "delta":
        value = delta_of_x(x, params)
    elif what == "delta0":
        value = delta0(1.0 - x, params)
    elif what == "dominant":
        value = delta0_dominant(1.0 - x, params)
    else:
        value = delta_oracle(x, params)

    meta = {"command": "eval", "a": params.a, "x": x, "what": what}
    _emit(config, fmt, [_fixed(what, config)], [{what: value}], meta, header=False)


@cli.command("zeros")
@click.option("--a", "a", type=float, required=True, help="Основание a > 1")
@click.option(
    "--target",
    type=click.Choice([target.value for target in ZeroTarget]),
    default=ZeroTarget.DELTA0.value,
    show_default=True,
)
@click.option("--count", type=int, required=True, help="Число нулей")
@numeric_options
@format_option
@click.pass_context
def zeros_command(ctx, a, target, count, eps, kmax, decimals, fmt):
    """Первые нули Δ, Δ₀ или доминирующей синусоиды по возрастанию x"""
    config = _resolve(ctx, eps, kmax, decimals)
    params = _params(config, a)

    zeros = list_zeros(params.a, ZeroTarget(target), count, params)
    rows = [{"n": n, "x": zero.x, "w": zero.w, "s": zero.s} for n, zero in enumerate(zeros)]
    columns = [_integer("n"), _fixed("x", config), _scientific("w", config), _fixed("s", config)]
    meta = {"command": "zeros", "a": params.a, "target": target, "count": count}
    _emit(config, fmt, columns, rows, meta)


@cli.command("table")
@click.option("--a", "a", type=float, required=True, help="Основание a > 1")
@click.option("--count", type=int, required=True, help="Число строк")
@click.option("--ladder", is_flag=True, help="В колонке x_delta0 печатать неуточнённую лестницу")
@numeric_options
@format_option
@click.pass_context
def table_command(ctx, a, count, ladder, eps, kmax, decimals, fmt):
    """Таблица нулей: n, x_delta, x_delta0, rel_err"""
    config = _resolve(ctx, eps, kmax, decimals)
    params = _params(config, a)

    table = build_table(params.a, count, params)
    rows = []
    for row in table:
        record = row.model_dump()
        if ladder:
            record["x_delta0"] = row.x_ladder
        rows.append(record)

    columns = [
        _integer("n"),
        _fixed("x_delta", config),
        _fixed("x_delta0", config),
        Column(name="rel_err", decimals=max(1, config.DECIMALS - 3)),
    ]
    distance_columns = [
        _scientific("w_delta", config),
        _scientific("w_delta0", config),
        _fixed("s_delta0", config),
    ]
    if OutputKind(fmt) is OutputKind.JSON:
        columns += [_fixed("x_ladder", config)] + distance_columns
    elif any(row.w_delta0 < W_FORM_THRESHOLD for row in table):
        # x неотличим от 1, значим только w и s
        columns += distance_columns
    meta = {"command": "table", "a": params.a, "count": count, "ladder": ladder}
    _emit(config, fmt, columns, rows, meta)


@cli.command("sweep")
@click.option("--a", "a", type=float, required=True, help="Основание a > 1")
@click.option("--from", "x_from", type=float, required=True, help="Левый конец по x")
@click.option("--to", "x_to", type=float, required=True, help="Правый конец по x")
@click.option("--points", type=int, required=True, help="Число узлов, концы включены")
@click.option("--log-w", is_flag=True, help="Узлы равномерны по ln(1 - x)")
@numeric_options
@format_option
@click.pass_context
def sweep_command(ctx, a, x_from, x_to, points, log_w, eps, kmax, decimals, fmt):
    """Данные для графиков: x, f, g, delta, delta0"""
    config = _resolve(ctx, eps, kmax, decimals)
    params = _params(config, a)

    records = sweep(x_from, x_to, points, params, log_w=log_w)
    rows = [record.model_dump() for record in records]
    columns = [_fixed("x", config)] + [_scientific(name, config) for name in ("f", "g", "delta", "delta0")]
    meta = {"command": "sweep", "a": params.a, "from": x_from, "to": x_to, "points": points, "log_w": log_w}
    _emit(config, fmt, columns, rows, meta)


@cli.command("characters")
@click.option("--a", "a", type=float, required=True, help="Основание a > 1")
@click.option("--count", type=click.IntRange(min=1), default=None, help="Первые count гармоник")
@numeric_options
@format_option
@click.pass_context
def characters_command(ctx, a, count, eps, kmax, decimals, fmt):
    """Характеры Γ(1 + 2kπi/log a): по умолчанию все, что входят в суммы"""
    config = _resolve(ctx, eps, kmax, decimals)
    params = _params(config, a)

    if count is None:
        harmonics = harmonic_characters(params.a, params.k_max, params.harmonic_cutoff)
    else:
        harmonics = [gamma_character(params.a, k) for k in range(1, count + 1)]

    rows = [
        {"k": ch.k, "theta": ch.theta, "modulus": ch.modulus, "phase": ch.phase, "arg": ch.arg}
        for ch in harmonics
    ]
    columns = [
        _integer("k"),
        _fixed("theta", config),
        _scientific("modulus", config),
        _fixed("phase", config),
        _fixed("arg", config),
    ]
    meta = {"command": "characters", "a": params.a, "count": len(rows)}
    _emit(config, fmt, columns, rows, meta)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Выполнить команду и вернуть код выхода

    Args:
        argv: Аргументы без имени программы

    Returns:
        0 при успехе, 1 при ошибке вычислений, 2 при ошибке использования
    """
    args = list(argv) if argv is not None else None
    try:
        cli.main(args=args, prog_name="lacunary", standalone_mode=True)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
