"""Детерминированный перебор basic pairs, пар basic pairs и отношений.

Порядок: лексикографически по (|X|, |S|, матрица ⊩ как little-endian целое).
Ключ ``pair_key`` повторяет этот порядок, поэтому индексы контрпримеров в
отчётах воспроизводимы между запусками.
"""
from __future__ import annotations

import random
from typing import Iterator

from src.services.basic_pair import BasicPair
from src.services.rel_communication import PairedSetting
from src.services.relations import FiniteCarrier, Rel, all_relations

from .base import EnumSpec


def pair_key(bp: BasicPair) -> tuple[int, int, int]:
    return bp.concrete.size, bp.formal.size, bp.forces.index


def basic_pairs_of_size(
    nx: int, ns: int, *, labels: tuple[str, str] = ("X", "S")
) -> Iterator[BasicPair]:
    concrete = FiniteCarrier(nx, labels[0])
    formal = FiniteCarrier(ns, labels[1])
    for forces in all_relations(concrete, formal):
        yield BasicPair(concrete, formal, forces)


def basic_pairs_up_to(
    max_x: int, max_s: int, *, labels: tuple[str, str] = ("X", "S")
) -> Iterator[BasicPair]:
    for nx in range(max_x + 1):
        for ns in range(max_s + 1):
            yield from basic_pairs_of_size(nx, ns, labels=labels)


def enumerate_basic_pairs(spec: EnumSpec) -> Iterator[BasicPair]:
    """Каждый basic pair с |X| ≤ max_x, |S| ≤ max_s ровно один раз."""
    return basic_pairs_up_to(spec.max_x, spec.max_s)


def enumerate_settings(spec: EnumSpec) -> Iterator[PairedSetting]:
    mx, ms, my, mt = spec.relation_bounds()
    targets = list(basic_pairs_up_to(my, mt, labels=("Y", "T")))
    for cx in basic_pairs_up_to(mx, ms):
        for cy in targets:
            yield PairedSetting(cx, cy)


def enumerate_relation_instances(
    spec: EnumSpec,
) -> Iterator[tuple[PairedSetting, Rel]]:
    """Исчерпывающая часть relation-сьюта: все (cx, cy, r)."""
    for ps in enumerate_settings(spec):
        yield from ((ps, r) for r in all_relations(ps.cx.concrete, ps.cy.concrete))


def _random_pair(rng: random.Random, n: int, labels: tuple[str, str]) -> BasicPair:
    concrete = FiniteCarrier(n, labels[0])
    formal = FiniteCarrier(n, labels[1])
    return BasicPair(concrete, formal, Rel.from_index(concrete, formal, rng.getrandbits(n * n)))


def sample_relation_instances(
    spec: EnumSpec,
) -> Iterator[tuple[PairedSetting, Rel]]:
    """``sample_size`` случайных (cx, cy, r) с |X|=|S|=|Y|=|T|=sample_dim.

    Один и тот же seed — одна и та же последовательность.
    """
    rng = random.Random(spec.seed)
    n = spec.sample_dim
    for _ in range(spec.sample_size):
        cx = _random_pair(rng, n, ("X", "S"))
        cy = _random_pair(rng, n, ("Y", "T"))
        r = Rel.from_index(cx.concrete, cy.concrete, rng.getrandbits(n * n))
        yield PairedSetting(cx, cy), r
