"""Текстовые документы: basic pair, отношение между парами, литералы подмножеств.

Формат basic pair::

    basicpair
    X 2
    S 3
    xlabels p q          # необязательно, ровно |X| меток
    slabels a b c        # необязательно, ровно |S| меток
    rel
    101
    011

Символ j строки x равен 1 ⇔ x ⊩ j. ``#`` — комментарий до конца строки,
пустые строки игнорируются; при |S| = 0 строки пустые и не пишутся.

Формат отношения r: X → Y (или s: S → T)::

    relation
    FROM 2
    TO 2
    rel
    10
    01
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from src.services.basic_pair import BasicPair
from src.services.modelcheck.base import InvalidTopology
from src.services.modelcheck.topology import FiniteTopology
from src.services.relations import FiniteCarrier, Rel, Subset

PAIR_MAGIC = "basicpair"
RELATION_MAGIC = "relation"

_SUBSET_RE = re.compile(r"^\{\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\}$")
_SIZE_RE = re.compile(r"[0-9]+")
_LABEL_RE = re.compile(r"^[^\s#]+$")


class DocumentError(Exception):
    """Ошибка разбора с позицией (строка/столбец с единицы)."""

    def __init__(self, message: str, *, line: int = 0, column: int = 0) -> None:
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True, slots=True)
class BasicPairDocument:
    pair: BasicPair
    xlabels: Optional[tuple[str, ...]] = None
    slabels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        for labels, carrier, name in (
            (self.xlabels, self.pair.concrete, "xlabels"),
            (self.slabels, self.pair.formal, "slabels"),
        ):
            if labels is None:
                continue
            if len(labels) != carrier.size:
                raise DocumentError(f"{name} has {len(labels)} labels, expected {carrier.size}")
            for label in labels:
                if not _LABEL_RE.match(label):
                    raise DocumentError(f"{name}: invalid label {label!r}")


@dataclass(frozen=True, slots=True)
class _Line:
    number: int
    offset: int   # столбец первого значащего символа (с нуля)
    text: str


def _lines(text: str) -> Iterator[_Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if stripped:
            yield _Line(number, len(content) - len(stripped), stripped)


class _Cursor:
    def __init__(self, text: str) -> None:
        self._lines = list(_lines(text))
        self._pos = 0
        self._last = self._lines[-1].number if self._lines else 1

    def peek(self) -> Optional[_Line]:
        return self._lines[self._pos] if self._pos < len(self._lines) else None

    def next(self, expected: str) -> _Line:
        line = self.peek()
        if line is None:
            raise DocumentError(f"unexpected end of document, expected {expected}", line=self._last + 1, column=1)
        self._pos += 1
        return line

    def finish(self) -> None:
        line = self.peek()
        if line is not None:
            raise DocumentError(f"unexpected content {line.text!r}", line=line.number, column=line.offset + 1)


def _expect_keyword(cursor: _Cursor, keyword: str) -> _Line:
    line = cursor.next(repr(keyword))
    if line.text != keyword:
        raise DocumentError(f"expected {keyword!r}, got {line.text!r}", line=line.number, column=line.offset + 1)
    return line


def _expect_size(cursor: _Cursor, keyword: str) -> int:
    line = cursor.next(f"'{keyword} <n>'")
    parts = line.text.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise DocumentError(f"expected '{keyword} <n>', got {line.text!r}", line=line.number, column=line.offset + 1)
    if not _SIZE_RE.fullmatch(parts[1]):
        column = line.offset + line.text.index(parts[1], len(parts[0])) + 1
        raise DocumentError(f"size must be a non-negative integer, got {parts[1]!r}", line=line.number, column=column)
    return int(parts[1])


def _maybe_labels(cursor: _Cursor, keyword: str, size: int) -> Optional[tuple[str, ...]]:
    line = cursor.peek()
    if line is None or line.text.split()[0] != keyword:
        return None
    cursor.next(keyword)
    labels = tuple(line.text.split()[1:])
    if len(labels) != size:
        raise DocumentError(
            f"{keyword} has {len(labels)} labels, expected {size}", line=line.number, column=line.offset + 1
        )
    return labels


def _read_rows(cursor: _Cursor, n_rows: int, width: int) -> tuple[int, ...]:
    """Строки матрицы; при width = 0 строк в документе нет."""
    if width == 0:
        return (0,) * n_rows
    rows = []
    for x in range(n_rows):
        line = cursor.next(f"row {x} of {n_rows}")
        if len(line.text) != width:
            raise DocumentError(
                f"row {x} has {len(line.text)} entries, expected {width}",
                line=line.number,
                column=line.offset + min(len(line.text), width) + 1,
            )
        mask = 0
        for j, char in enumerate(line.text):
            if char == "1":
                mask |= 1 << j
            elif char != "0":
                raise DocumentError(
                    f"illegal character {char!r}, expected 0 or 1", line=line.number, column=line.offset + j + 1
                )
        rows.append(mask)
    return tuple(rows)


def _format_rows(r: Rel) -> list[str]:
    if r.target.size == 0:
        return []
    return ["".join("1" if row >> j & 1 else "0" for j in r.target.elements()) for row in r.rows]


# --- basic pair ------------------------------------------------------------


def parse_document(text: str) -> BasicPairDocument:
    cursor = _Cursor(text)
    _expect_keyword(cursor, PAIR_MAGIC)
    nx = _expect_size(cursor, "X")
    ns = _expect_size(cursor, "S")
    xlabels = _maybe_labels(cursor, "xlabels", nx)
    slabels = _maybe_labels(cursor, "slabels", ns)
    _expect_keyword(cursor, "rel")
    rows = _read_rows(cursor, nx, ns)
    cursor.finish()
    return BasicPairDocument(BasicPair.from_masks(nx, ns, rows), xlabels, slabels)


def print_document(doc: BasicPairDocument) -> str:
    bp = doc.pair
    lines = [PAIR_MAGIC, f"X {bp.concrete.size}", f"S {bp.formal.size}"]
    if doc.xlabels is not None:
        lines.append(" ".join(("xlabels", *doc.xlabels)))
    if doc.slabels is not None:
        lines.append(" ".join(("slabels", *doc.slabels)))
    lines.append("rel")
    lines.extend(_format_rows(bp.forces))
    return "\n".join(lines) + "\n"


def parse_basic_pair(text: str) -> BasicPair:
    return parse_document(text).pair


def print_basic_pair(bp: BasicPair) -> str:
    return print_document(BasicPairDocument(bp))


# --- relation --------------------------------------------------------------


def parse_relation(
    text: str,
    source: Optional[FiniteCarrier] = None,
    target: Optional[FiniteCarrier] = None,
) -> Rel:
    """Отношение из документа; если переданы носители, размеры обязаны совпасть."""
    cursor = _Cursor(text)
    _expect_keyword(cursor, RELATION_MAGIC)
    n = _expect_size(cursor, "FROM")
    m = _expect_size(cursor, "TO")
    line = cursor.peek()
    if line is not None and line.text == "rel":
        cursor.next("rel")
    rows = _read_rows(cursor, n, m)
    cursor.finish()

    for carrier, size, role in ((source, n, "FROM"), (target, m, "TO")):
        if carrier is not None and carrier.size != size:
            raise DocumentError(f"{role} {size} does not match carrier of size {carrier.size}")
    src = source or FiniteCarrier(n)
    dst = target or FiniteCarrier(m)
    return Rel(src, dst, rows)


def print_relation(r: Rel) -> str:
    lines = [RELATION_MAGIC, f"FROM {r.source.size}", f"TO {r.target.size}", "rel"]
    lines.extend(_format_rows(r))
    return "\n".join(lines) + "\n"


# --- literals --------------------------------------------------------------


def parse_subset(literal: str, carrier: FiniteCarrier) -> Subset:
    """``{}`` или ``{0,2}``: десятичные индексы элементов носителя."""
    match = _SUBSET_RE.match(literal.strip())
    if match is None:
        raise DocumentError(f"malformed subset literal {literal!r}, expected e.g. {{0,2}}")
    body = match.group(1)
    elements = [int(e) for e in body.split(",")] if body else []
    for e in elements:
        if e >= carrier.size:
            raise DocumentError(f"element {e} is outside a carrier of size {carrier.size}")
    return Subset.of(carrier, elements)


def parse_topology(n: int, literals: tuple[str, ...] | list[str]) -> FiniteTopology:
    ground = FiniteCarrier(n, "Ω")
    opens = tuple(parse_subset(lit, ground) for lit in literals)
    try:
        return FiniteTopology(ground, opens)
    except InvalidTopology as e:
        raise DocumentError(str(e)) from e
