"""Непрерывность отношений между двумя basic pairs и её коммуникационная форма.

Фиксируем ``cx = (X, ⊩, S)`` и ``cy = (Y, ⊩, T)``. Для r: X → Y:

    σ(r)(a, b)  ⇔  ext a ⊆ r⁻ ext b                    (S → T)
    ρ(s)(x, y)  ⇔  ◇y ⊆ s ◇x                           (X → Y)
    r1 ~ r2     ⇔  r1⁻ ext b = r2⁻ ext b для всех b ∈ T
    s1 ≈ s2     ⇔  s1 ◇x = s2 ◇x для всех x ∈ X

r непрерывно ⇔ каждое ``r⁻ ext b`` открыто в cx ⇔ ``r ~ ρ(σ(r))``. Вторая
эквивалентность проверяется model checker'ом (THM_CONTINUITY), а
``is_rel_communicable`` идёт через общий ``CommunicationSystem``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Optional

from .basic_pair import BasicPair, box, diamond_point, ext, ext_index, is_open
from .communication import (
    CommunicationSystem,
    MessageSpace,
    is_communicable_a,
    is_communicable_b,
)
from .relations import (
    DimensionError,
    Rel,
    Subset,
    all_relations,
    existential_image,
    existential_preimage,
    iter_bits,
)


@dataclass(frozen=True, slots=True)
class PairedSetting:
    cx: BasicPair
    cy: BasicPair


def _require_concrete_rel(ps: PairedSetting, r: Rel) -> None:
    if r.source.size != ps.cx.concrete.size or r.target.size != ps.cy.concrete.size:
        raise DimensionError(
            f"relation is {r.source.size}x{r.target.size}, expected "
            f"X→Y = {ps.cx.concrete.size}x{ps.cy.concrete.size}"
        )


def _require_formal_rel(ps: PairedSetting, s: Rel) -> None:
    if s.source.size != ps.cx.formal.size or s.target.size != ps.cy.formal.size:
        raise DimensionError(
            f"relation is {s.source.size}x{s.target.size}, expected "
            f"S→T = {ps.cx.formal.size}x{ps.cy.formal.size}"
        )


# --- Relation shape --------------------------------------------------------


def is_single_valued(r: Rel) -> bool:
    return all(not mask & (mask - 1) for mask in r.rows)


def is_total(r: Rel) -> bool:
    return all(r.rows)


def is_function(r: Rel) -> bool:
    return is_single_valued(r) and is_total(r)


def restriction_of(r1: Rel, r2: Rel) -> bool:
    """``r1 ⊆ r2`` как множества пар."""
    if not r1.same_shape(r2):
        raise DimensionError("restriction check needs relations of the same shape")
    return all(not a & ~b for a, b in zip(r1.rows, r2.rows))


# --- Preimages / images ----------------------------------------------------


def basic_preimages(ps: PairedSetting, r: Rel) -> tuple[Subset, ...]:
    """Семейство ``r⁻ ext b``, индексированное b ∈ T."""
    _require_concrete_rel(ps, r)
    return tuple(
        existential_preimage(r, ext_index(ps.cy, b)) for b in ps.cy.formal.elements()
    )


def point_images(ps: PairedSetting, s: Rel) -> tuple[Subset, ...]:
    """Семейство ``s ◇x``, индексированное x ∈ X."""
    _require_formal_rel(ps, s)
    return tuple(
        existential_image(s, diamond_point(ps.cx, x)) for x in ps.cx.concrete.elements()
    )


def rel_equiv_concrete(ps: PairedSetting, r1: Rel, r2: Rel) -> bool:
    """``r1 ~ r2``."""
    return basic_preimages(ps, r1) == basic_preimages(ps, r2)


def rel_equiv_formal(ps: PairedSetting, s1: Rel, s2: Rel) -> bool:
    """``s1 ≈ s2``."""
    return point_images(ps, s1) == point_images(ps, s2)


# --- Continuity ------------------------------------------------------------


def is_continuous(ps: PairedSetting, r: Rel) -> bool:
    """Каждый прообраз базисной окрестности открыт в cx."""
    return all(is_open(ps.cx, p) for p in basic_preimages(ps, r))


def continuity_witness(ps: PairedSetting, r: Rel) -> Optional[tuple[int, int]]:
    """Первая пара (b, x): x ∈ r⁻ ext b, но у x нет окрестности внутри. None — непрерывно."""
    for b, pre in enumerate(basic_preimages(ps, r)):
        uncovered = pre.bits & ~ext(ps.cx, box(ps.cx, pre)).bits
        if uncovered:
            return b, next(iter_bits(uncovered))
    return None


# --- σ / ρ -----------------------------------------------------------------


def sigma(ps: PairedSetting, r: Rel) -> Rel:
    """σ(r): S → T, ``σ(r)(a, b) ⇔ ext a ⊆ r⁻ ext b``."""
    pre = [p.bits for p in basic_preimages(ps, r)]
    rows = []
    for ext_a in ps.cx.forces.cols:
        mask = 0
        for b, pre_b in enumerate(pre):
            if not ext_a & ~pre_b:
                mask |= 1 << b
        rows.append(mask)
    return Rel(ps.cx.formal, ps.cy.formal, tuple(rows))


def rho(ps: PairedSetting, s: Rel) -> Rel:
    """ρ(s): X → Y, ``ρ(s)(x, y) ⇔ ◇y ⊆ s ◇x``."""
    images = [img.bits for img in point_images(ps, s)]
    rows = []
    for image in images:
        mask = 0
        for y, diamond_y in enumerate(ps.cy.forces.rows):
            if not diamond_y & ~image:
                mask |= 1 << y
        rows.append(mask)
    return Rel(ps.cx.concrete, ps.cy.concrete, tuple(rows))


def round_trip(ps: PairedSetting, r: Rel) -> Rel:
    """``ρ(σ(r))``."""
    return rho(ps, sigma(ps, r))


# --- Communication system --------------------------------------------------


def _concrete_space(ps: PairedSetting) -> MessageSpace[Rel]:
    x, y = ps.cx.concrete, ps.cy.concrete
    return MessageSpace(
        name="Rel(X,Y)",
        equivalent=partial(rel_equiv_concrete, ps),
        contains=lambda r: isinstance(r, Rel)
        and r.source.size == x.size
        and r.target.size == y.size,
        elements=partial(all_relations, x, y),
    )


def _formal_space(ps: PairedSetting) -> MessageSpace[Rel]:
    s, t = ps.cx.formal, ps.cy.formal
    return MessageSpace(
        name="Rel(S,T)",
        equivalent=partial(rel_equiv_formal, ps),
        contains=lambda r: isinstance(r, Rel)
        and r.source.size == s.size
        and r.target.size == t.size,
        elements=partial(all_relations, s, t),
    )


def relation_system(ps: PairedSetting) -> CommunicationSystem[Rel, Rel]:
    """``((Rel(X,Y), ~), (Rel(S,T), ≈), σ, ρ)``."""
    return CommunicationSystem(
        messages_a=_concrete_space(ps),
        messages_b=_formal_space(ps),
        delta=partial(sigma, ps),
        nabla=partial(rho, ps),
    )


def is_rel_communicable(ps: PairedSetting, r: Rel) -> bool:
    """``r ~ ρ(σ(r))``."""
    return is_communicable_a(relation_system(ps), r)


def is_formal_communicable(ps: PairedSetting, s: Rel) -> bool:
    """``σ(ρ(s)) ≈ s``. Теоремы за этим не стоит — только наблюдение."""
    return is_communicable_b(relation_system(ps), s)
