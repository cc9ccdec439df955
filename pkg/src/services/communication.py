"""Системы коммуникации и каталог стратегий декодирования подмножеств.

Система коммуникации — четвёрка ``((M_A, ~A), (M_B, ~B), Δ, ∇)``: два
пространства сообщений со своими эквивалентностями и два декодера. Сообщение
m ∈ M_A коммуницируемо, если ``∇(Δ(m)) ~A m``; сообщение со стороны B — если
``Δ(∇(m)) ~B m`` (сравниваем по ~B, Δ(∇(m)) живёт в M_B).

Одна и та же абстракция обслуживает и подмножества basic pair
(``(PX, =)``, ``(PS, =)``), и отношения между двумя basic pairs (~ и ≈, см.
``rel_communication``).
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from functools import partial
from itertools import product
from typing import Callable, Generic, Iterable, Optional, TypeVar

from .basic_pair import (
    BasicPair,
    arrow_left,
    arrow_right,
    box,
    diamond,
    ext,
    is_closed,
    is_open,
    rest,
)
from .relations import FiniteCarrier, Subset, powerset

A = TypeVar("A")
B = TypeVar("B")
M = TypeVar("M")


class MessageError(Exception):
    """Сообщение не принадлежит пространству сообщений."""


@dataclass(frozen=True)
class MessageSpace(Generic[M]):
    """Пространство сообщений с эквивалентностью.

    ``elements`` задаётся только для конечных пространств, которые можно
    перебрать (нужно для ``respects_equivalences``).
    """

    name: str
    equivalent: Callable[[M, M], bool]
    contains: Callable[[M], bool]
    elements: Optional[Callable[[], Iterable[M]]] = None

    def require(self, message: M) -> M:
        if not self.contains(message):
            raise MessageError(f"message {message!s} is not in {self.name}")
        return message


@dataclass(frozen=True)
class CommunicationSystem(Generic[A, B]):
    messages_a: MessageSpace[A]
    messages_b: MessageSpace[B]
    delta: Callable[[A], B]
    nabla: Callable[[B], A]


def is_communicable_a(cs: CommunicationSystem[A, B], m: A) -> bool:
    """``∇(Δ(m)) ~A m``."""
    cs.messages_a.require(m)
    return cs.messages_a.equivalent(cs.nabla(cs.delta(m)), m)


def is_communicable_b(cs: CommunicationSystem[A, B], m: B) -> bool:
    """``Δ(∇(m)) ~B m``."""
    cs.messages_b.require(m)
    return cs.messages_b.equivalent(cs.delta(cs.nabla(m)), m)


def respects_equivalences(cs: CommunicationSystem[A, B]) -> bool:
    """Оба декодера переводят эквивалентные сообщения в эквивалентные.

    Перебор квадратичный по размеру пространств — только для маленьких.
    """
    if cs.messages_a.elements is None or cs.messages_b.elements is None:
        raise MessageError("respect check needs enumerable message spaces")
    side_a = list(cs.messages_a.elements())
    side_b = list(cs.messages_b.elements())
    eq_a, eq_b = cs.messages_a.equivalent, cs.messages_b.equivalent

    for m, m2 in product(side_a, repeat=2):
        if eq_a(m, m2) and not eq_b(cs.delta(m), cs.delta(m2)):
            return False
    for m, m2 in product(side_b, repeat=2):
        if eq_b(m, m2) and not eq_a(cs.nabla(m), cs.nabla(m2)):
            return False
    return True


# --- Subset strategies -----------------------------------------------------


SubsetOperator = Callable[[BasicPair, Subset], Subset]


class Strategy(str, Enum):
    """Пара (Δ, ∇). Имя — каноничная строка для CLI и отчётов."""

    BOX_EXT = "BOX_EXT"
    DIAMOND_REST = "DIAMOND_REST"
    DIAMOND_EXT = "DIAMOND_EXT"
    BOX_REST = "BOX_REST"
    ARROW_EXT = "ARROW_EXT"
    ARROW_REST = "ARROW_REST"
    BOX_ARROWLEFT = "BOX_ARROWLEFT"
    DIAMOND_ARROWLEFT = "DIAMOND_ARROWLEFT"
    ARROW_ARROWLEFT = "ARROW_ARROWLEFT"

    @property
    def symbol(self) -> str:
        """``□ext``, ``◇rest``, ``→←`` …"""
        strat = STRATEGIES[self]
        return _DELTA_SYMBOLS[strat.delta] + _NABLA_SYMBOLS[strat.nabla]


@dataclass(frozen=True, slots=True)
class SubsetStrategy:
    name: Strategy
    delta: SubsetOperator
    nabla: SubsetOperator


_DELTA_SYMBOLS: dict[SubsetOperator, str] = {box: "□", diamond: "◇", arrow_right: "→"}
_NABLA_SYMBOLS: dict[SubsetOperator, str] = {ext: "ext", rest: "rest", arrow_left: "←"}

STRATEGIES: dict[Strategy, SubsetStrategy] = {
    s.name: s
    for s in (
        SubsetStrategy(Strategy.BOX_EXT, box, ext),
        SubsetStrategy(Strategy.DIAMOND_REST, diamond, rest),
        SubsetStrategy(Strategy.DIAMOND_EXT, diamond, ext),
        SubsetStrategy(Strategy.BOX_REST, box, rest),
        SubsetStrategy(Strategy.ARROW_EXT, arrow_right, ext),
        SubsetStrategy(Strategy.ARROW_REST, arrow_right, rest),
        SubsetStrategy(Strategy.BOX_ARROWLEFT, box, arrow_left),
        SubsetStrategy(Strategy.DIAMOND_ARROWLEFT, diamond, arrow_left),
        SubsetStrategy(Strategy.ARROW_ARROWLEFT, arrow_right, arrow_left),
    )
}


def powerset_space(carrier: FiniteCarrier, name: str) -> MessageSpace[Subset]:
    """``(P carrier, =)``."""
    return MessageSpace(
        name=name,
        equivalent=operator.eq,
        contains=lambda m: isinstance(m, Subset) and m.carrier.size == carrier.size,
        elements=partial(powerset, carrier),
    )


def subset_system(
    bp: BasicPair, strategy: Strategy | str
) -> CommunicationSystem[Subset, Subset]:
    strat = STRATEGIES[Strategy(strategy)]
    return CommunicationSystem(
        messages_a=powerset_space(bp.concrete, "P(X)"),
        messages_b=powerset_space(bp.formal, "P(S)"),
        delta=partial(strat.delta, bp),
        nabla=partial(strat.nabla, bp),
    )


def subset_systems(bp: BasicPair) -> dict[Strategy, CommunicationSystem[Subset, Subset]]:
    """Все девять систем одного basic pair — model checker строит их раз на пару."""
    return {s: subset_system(bp, s) for s in Strategy}


@dataclass(slots=True)
class SubsetClassification:
    subset: Subset
    open: bool
    closed: bool
    clopen: bool
    communicable: dict[Strategy, bool]
    box: Subset
    diamond: Subset
    arrow: Subset


def classify_subset(bp: BasicPair, d: Subset) -> SubsetClassification:
    """Открытость, замкнутость и вердикты по всем девяти стратегиям."""
    systems = subset_systems(bp)
    is_o, is_c = is_open(bp, d), is_closed(bp, d)
    return SubsetClassification(
        subset=d,
        open=is_o,
        closed=is_c,
        clopen=is_o and is_c,
        communicable={s: is_communicable_a(cs, d) for s, cs in systems.items()},
        box=box(bp, d),
        diamond=diamond(bp, d),
        arrow=arrow_right(bp, d),
    )


def communicable_subsets(bp: BasicPair, strategy: Strategy | str) -> list[Subset]:
    """Все A-коммуницируемые подмножества X в порядке возрастания маски."""
    cs = subset_system(bp, strategy)
    return [d for d in powerset(bp.concrete) if is_communicable_a(cs, d)]
