"""Наивные кванторные вычислители — эталон для битовых реализаций.

Здесь всё пишется «как в определении»: перебор элементов, any/all, без
масок. Медленно, зато проверяемо глазами. Используется тестами и model
checker'ом (THM_OPEN, THM_CLOSED, THM_CONTINUITY сравнивают битовую
реализацию с этими функциями).
"""
from __future__ import annotations

from .basic_pair import BasicPair, box, diamond_point
from .rel_communication import PairedSetting
from .relations import Rel, Subset, overlaps


def naive_existential_image(r: Rel, d: Subset) -> Subset:
    return Subset.of(
        r.target,
        (
            y for y in r.target.elements()
            if any(r.holds(x, y) and x in d for x in r.source.elements())
        ),
    )


def naive_universal_coimage(r: Rel, d: Subset) -> Subset:
    return Subset.of(
        r.target,
        (
            y for y in r.target.elements()
            if all(x in d for x in r.source.elements() if r.holds(x, y))
        ),
    )


def naive_existential_preimage(r: Rel, e: Subset) -> Subset:
    return Subset.of(
        r.source,
        (
            x for x in r.source.elements()
            if any(r.holds(x, y) and y in e for y in r.target.elements())
        ),
    )


def naive_universal_preimage(r: Rel, e: Subset) -> Subset:
    return Subset.of(
        r.source,
        (
            x for x in r.source.elements()
            if all(y in e for y in r.target.elements() if r.holds(x, y))
        ),
    )


def _ext_within(bp: BasicPair, a: int, d: Subset) -> bool:
    return all(x in d for x in bp.concrete.elements() if bp.forces.holds(x, a))


def _ext_meets(bp: BasicPair, a: int, d: Subset) -> bool:
    return any(bp.forces.holds(x, a) and x in d for x in bp.concrete.elements())


def open_by_definition(bp: BasicPair, d: Subset) -> bool:
    """У каждой точки D есть базисная окрестность внутри D."""
    return all(
        any(bp.forces.holds(x, a) and _ext_within(bp, a, d) for a in bp.formal.elements())
        for x in d
    )


def closed_by_definition(bp: BasicPair, d: Subset) -> bool:
    """Точка лежит в D, как только все её окрестности пересекают D."""
    for x in bp.concrete.elements():
        adherent = all(
            _ext_meets(bp, a, d) for a in bp.formal.elements() if bp.forces.holds(x, a)
        )
        if adherent and x not in d:
            return False
    return True


def _naive_basic_preimage(ps: PairedSetting, r: Rel, b: int) -> Subset:
    cy = ps.cy
    return Subset.of(
        r.source,
        (
            x for x in r.source.elements()
            if any(r.holds(x, y) and cy.forces.holds(y, b) for y in r.target.elements())
        ),
    )


def continuous_by_definition(ps: PairedSetting, r: Rel) -> bool:
    """∀b ∀x: x ε r⁻ ext b → ∃a (x ⊩ a ∧ ext a ⊆ r⁻ ext b)."""
    cx = ps.cx
    for b in ps.cy.formal.elements():
        pre = _naive_basic_preimage(ps, r, b)
        for x in pre:
            if not any(
                cx.forces.holds(x, a) and _ext_within(cx, a, pre)
                for a in cx.formal.elements()
            ):
                return False
    return True


def continuous_by_diamond(ps: PairedSetting, r: Rel) -> bool:
    """∀b ∀x: x ε r⁻ ext b → ◇x ≬ □ r⁻ ext b."""
    for b in ps.cy.formal.elements():
        pre = _naive_basic_preimage(ps, r, b)
        boxed = box(ps.cx, pre)
        if not all(overlaps(diamond_point(ps.cx, x), boxed) for x in pre):
            return False
    return True
