"""Команды CLI ``basicpairs``.

Коды выхода: 0 — успех, 1 — провал сьюта model checker'а, 2 — ошибка ввода.
stdout — только результат команды, логи уходят в stderr.
"""
from __future__ import annotations

import functools
import logging
from typing import Callable, Optional, TextIO

import click

from src.core.config import DEFAULT_WORKERS, REPORT_MAX_WITNESSES
from src.services.basic_pair import BasicPair, is_hausdorff, satisfies_b1, satisfies_b2
from src.services.communication import (
    MessageError,
    Strategy,
    classify_subset,
    communicable_subsets,
)
from src.services.modelcheck import (
    EnumSpec,
    ModelCheckError,
    from_topology,
    render_structured,
    render_text,
    run_suite,
    verify_remark,
)
from src.services.modelcheck.topology import enumerate_topologies
from src.services.rel_communication import (
    PairedSetting,
    continuity_witness,
    is_rel_communicable,
    rho,
    round_trip,
    sigma,
)
from src.services.relations import RelationError

from .documents import (
    DocumentError,
    parse_basic_pair,
    parse_relation,
    parse_subset,
    parse_topology,
    print_basic_pair,
    print_relation,
)
from .schemas import AxiomsRecord, ClassificationRecord, CommunicableRecord, ContinuityRecord

logger = logging.getLogger(__name__)

FORMATS = ("text", "structured")


class InputError(click.ClickException):
    """Неверный документ, литерал или границы перебора."""

    exit_code = 2


def _input_errors(func: Callable) -> Callable:
    """Ошибки разбора и валидации → код выхода 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (DocumentError, RelationError, MessageError, ModelCheckError) as e:
            logger.info("Input rejected: %s", e)
            raise InputError(str(e)) from e

    return wrapper


def _format_option(func: Callable) -> Callable:
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(FORMATS),
        default="text",
        show_default=True,
    )(func)


def _read_text(stream: TextIO) -> str:
    try:
        return stream.read()
    except UnicodeDecodeError as e:
        name = getattr(stream, "name", "<stream>")
        raise DocumentError(f"{name}: not valid UTF-8 at byte {e.start}") from e


def _read_pair(stream: TextIO) -> BasicPair:
    return parse_basic_pair(_read_text(stream))


def _mark(flag: bool) -> str:
    return "✓" if flag else "✗"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Basic pairs: операторы, коммуницируемость, непрерывность и model checking."""


@cli.command()
@click.argument("pair_file", type=click.File("r", encoding="utf-8"))
@click.argument("subset")
@_format_option
@_input_errors
def classify(pair_file: TextIO, subset: str, output_format: str) -> None:
    """Открытость/замкнутость SUBSET и вердикты всех девяти стратегий."""
    bp = _read_pair(pair_file)
    c = classify_subset(bp, parse_subset(subset, bp.concrete))
    if output_format == "structured":
        click.echo(ClassificationRecord.from_classification(c).model_dump_json())
        return

    tokens = ["open" if c.open else "¬open", "closed" if c.closed else "¬closed"]
    # □ext и ◇rest совпадают с open/closed, в строке-итоге их не повторяем.
    for s in Strategy:
        if s in (Strategy.BOX_EXT, Strategy.DIAMOND_REST):
            continue
        tokens.append(s.symbol if c.communicable[s] else f"¬{s.symbol}")
    tokens.append("clopen" if c.clopen else "¬clopen")

    click.echo(f"D = {c.subset}")
    click.echo(f"□D = {c.box}")
    click.echo(f"◇D = {c.diamond}")
    click.echo(f"D→ = {c.arrow}")
    click.echo(" ".join(tokens))
    for s in Strategy:
        click.echo(f"{s.value} {s.symbol} {_mark(c.communicable[s])}")


@cli.command()
@click.argument("pair_file", type=click.File("r", encoding="utf-8"))
@_format_option
@_input_errors
def axioms(pair_file: TextIO, output_format: str) -> None:
    """Аксиомы B1, B2 и хаусдорфовость."""
    bp = _read_pair(pair_file)
    record = AxiomsRecord(b1=satisfies_b1(bp), b2=satisfies_b2(bp), t2=is_hausdorff(bp))
    if output_format == "structured":
        click.echo(record.model_dump_json())
    else:
        click.echo(f"B1 {_mark(record.b1)} B2 {_mark(record.b2)} T2 {_mark(record.t2)}")


@cli.command()
@click.argument("pair_file", type=click.File("r", encoding="utf-8"))
@click.option(
    "--strategy",
    "strategies",
    multiple=True,
    type=click.Choice([s.value for s in Strategy]),
    help="Ограничить вывод стратегиями (по умолчанию все девять).",
)
@_format_option
@_input_errors
def communicable(pair_file: TextIO, strategies: tuple[str, ...], output_format: str) -> None:
    """Все A-коммуницируемые подмножества X по стратегиям."""
    bp = _read_pair(pair_file)
    selected = [Strategy(s) for s in strategies] or list(Strategy)
    for s in selected:
        subsets = [str(d) for d in communicable_subsets(bp, s)]
        if output_format == "structured":
            click.echo(CommunicableRecord(strategy=s.value, subsets=subsets).model_dump_json())
        else:
            click.echo(f"{s.value} {s.symbol}: {' '.join(subsets)}")


def _setting(source_file: TextIO, target_file: TextIO) -> PairedSetting:
    return PairedSetting(_read_pair(source_file), _read_pair(target_file))


@cli.command()
@click.argument("source_pair", type=click.File("r", encoding="utf-8"))
@click.argument("target_pair", type=click.File("r", encoding="utf-8"))
@click.argument("relation_file", type=click.File("r", encoding="utf-8"))
@_format_option
@_input_errors
def continuity(
    source_pair: TextIO, target_pair: TextIO, relation_file: TextIO, output_format: str
) -> None:
    """Непрерывность r: X → Y, σ(r), ρ(σ(r)) и (σ,ρ)-коммуницируемость."""
    ps = _setting(source_pair, target_pair)
    r = parse_relation(_read_text(relation_file), ps.cx.concrete, ps.cy.concrete)
    witness = continuity_witness(ps, r)
    s = sigma(ps, r)
    back = round_trip(ps, r)
    record = ContinuityRecord(
        continuous=witness is None,
        witness=witness,
        sigma=list(s.pairs()),
        rho_sigma=list(back.pairs()),
        communicable=is_rel_communicable(ps, r),
    )
    if output_format == "structured":
        click.echo(record.model_dump_json())
        return

    if witness is None:
        click.echo("continuous")
    else:
        click.echo(f"not continuous: b={witness[0]} x={witness[1]}")
    click.echo("σ(r):")
    click.echo(print_relation(s), nl=False)
    click.echo("ρ(σ(r)):")
    click.echo(print_relation(back), nl=False)
    click.echo("(σ,ρ)-communicable" if record.communicable else "not (σ,ρ)-communicable")


@cli.command("sigma")
@click.argument("source_pair", type=click.File("r", encoding="utf-8"))
@click.argument("target_pair", type=click.File("r", encoding="utf-8"))
@click.argument("relation_file", type=click.File("r", encoding="utf-8"))
@_input_errors
def sigma_command(source_pair: TextIO, target_pair: TextIO, relation_file: TextIO) -> None:
    """σ(r): S → T для r: X → Y."""
    ps = _setting(source_pair, target_pair)
    r = parse_relation(_read_text(relation_file), ps.cx.concrete, ps.cy.concrete)
    click.echo(print_relation(sigma(ps, r)), nl=False)


@cli.command("rho")
@click.argument("source_pair", type=click.File("r", encoding="utf-8"))
@click.argument("target_pair", type=click.File("r", encoding="utf-8"))
@click.argument("relation_file", type=click.File("r", encoding="utf-8"))
@_input_errors
def rho_command(source_pair: TextIO, target_pair: TextIO, relation_file: TextIO) -> None:
    """ρ(s): X → Y для s: S → T."""
    ps = _setting(source_pair, target_pair)
    s = parse_relation(_read_text(relation_file), ps.cx.formal, ps.cy.formal)
    click.echo(print_relation(rho(ps, s)), nl=False)


def _emit_reports(reports, output_format: str) -> None:
    if output_format == "structured":
        click.echo(render_structured(reports), nl=False)
    else:
        click.echo(render_text(reports, REPORT_MAX_WITNESSES), nl=False)
    if not all(r.passed for r in reports):
        click.get_current_context().exit(1)


@cli.command()
@click.option("--theorem", "theorems", multiple=True, help="Идентификатор сьюта; по умолчанию все.")
@click.option("--max-x", type=int, default=None)
@click.option("--max-s", type=int, default=None)
@click.option("--max-y", type=int, default=None)
@click.option("--max-t", type=int, default=None)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None)
@click.option("--samples", type=int, default=None, help="Размер seeded-выборки relation-сьютов.")
@click.option("--workers", type=int, default=DEFAULT_WORKERS, show_default=True)
@_format_option
@_input_errors
def modelcheck(
    theorems: tuple[str, ...],
    max_x: Optional[int],
    max_s: Optional[int],
    max_y: Optional[int],
    max_t: Optional[int],
    seed: Optional[int],
    samples: Optional[int],
    workers: int,
    output_format: str,
) -> None:
    """Прогнать зарегистрированные сьюты. Код 1, если хоть один не прошёл."""
    overrides = {
        "max_x": max_x,
        "max_s": max_s,
        "max_y": max_y,
        "max_t": max_t,
        "seed": seed,
        "sample_size": samples,
    }
    spec = EnumSpec(**{k: v for k, v in overrides.items() if v is not None})
    if workers < 1:
        raise InputError(f"--workers must be >= 1, got {workers}")
    logger.info("Running model check with %s, workers=%d", spec, workers)
    reports = run_suite(theorems or None, spec, workers=workers)
    _emit_reports(reports, output_format)


@cli.command("from-topology")
@click.argument("n", type=click.IntRange(0))
@click.argument("opens", nargs=-1)
@_input_errors
def from_topology_command(n: int, opens: tuple[str, ...]) -> None:
    """Документ basic pair (Ω, ∈, 𝒯) для топологии на N точках."""
    t = parse_topology(n, opens)
    click.echo(print_basic_pair(from_topology(t)), nl=False)


@cli.command()
@click.argument("n", type=click.IntRange(1))
@click.argument("opens", nargs=-1)
@click.option("--all", "sweep_all", is_flag=True, help="Все топологии на N точках.")
@_format_option
@_input_errors
def remark(n: int, opens: tuple[str, ...], sweep_all: bool, output_format: str) -> None:
    """Неподвижные точки (Ω, ∈, 𝒯) против топологических предикатов."""
    if sweep_all:
        if opens:
            raise InputError("--all takes no OPENS")
        reports = [verify_remark(t) for t in enumerate_topologies(n)]
    else:
        reports = [verify_remark(parse_topology(n, opens))]
    _emit_reports(reports, output_format)
