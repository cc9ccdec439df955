"""Мост к классической топологии: конечная топология 𝒯 на Ω как basic pair (Ω, ∈, 𝒯).

``verify_remark`` сверяет неподвижные точки операторов basic pair с
топологическими предикатами для каждого D ⊆ Ω:

    1. D = ext □ D                ⇔ D ∈ 𝒯
    2. D = rest ◇ D               ⇔ D замкнуто
    3. D = ext ◇ D ⇔ D = rest □ D ⇔ D = ∅ или D = Ω
    4. D = ext(D→)                ⇔ D = Ω;   D = (□D)← ⇔ D = ∅
    5. D = (D→)←                  ⇔ D — пересечение открытых
    6. D = rest(D→)               ⇔ D — замкнутая T₀-точка
    7. D = (◇D)←                  ⇔ D — T₀-точка и пересечение открытых

Про (□D)←: ∅ ∈ 𝒯, поэтому индекс ∅ всегда лежит в □D и (□D)← = ∅. Формулировка
«D = (□D)← ⇔ D = Ω» ложна на любой непустой Ω — она заведена отдельной
не-теоремой NONTHM_REMARK_BOX_ARROWLEFT.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from src.core.config import MAX_TOPOLOGY_GROUND
from src.services.basic_pair import (
    BasicPair,
    arrow_left,
    arrow_right,
    box,
    diamond,
    ext,
    rest,
)
from src.services.relations import FiniteCarrier, Rel, Subset, iter_bits, powerset

from .base import CheckReport, Counterexample, InvalidTopology, ModelCheckError, SuiteKind

REMARK_CLAUSES = 7


@dataclass(frozen=True, slots=True)
class FiniteTopology:
    ground: FiniteCarrier
    opens: tuple[Subset, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "opens", tuple(self.opens))
        self.validate()

    def validate(self) -> None:
        masks = set()
        for o in self.opens:
            if o.carrier.size != self.ground.size:
                raise InvalidTopology(f"open {o} is not a subset of the ground set")
            if o.bits in masks:
                raise InvalidTopology(f"open {o} listed twice")
            masks.add(o.bits)
        if not _is_topology(masks, self.ground.full_mask):
            raise InvalidTopology(
                "family must contain ∅ and Ω and be closed under ∪ and ∩"
            )

    @classmethod
    def from_masks(cls, n: int, masks: list[int] | tuple[int, ...]) -> FiniteTopology:
        ground = FiniteCarrier(n, "Ω")
        return cls(ground, tuple(Subset(ground, m) for m in masks))

    def open_masks(self) -> frozenset[int]:
        return frozenset(o.bits for o in self.opens)


def _is_topology(masks: set[int] | frozenset[int], full: int) -> bool:
    if 0 not in masks or full not in masks:
        return False
    ordered = sorted(masks)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in masks or a & b not in masks:
                return False
    return True


def discrete(n: int) -> FiniteTopology:
    return FiniteTopology.from_masks(n, list(range(1 << n)))


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology.from_masks(n, sorted({0, (1 << n) - 1}))


def sierpinski() -> FiniteTopology:
    """{∅, {0}, {0,1}} на двух точках."""
    return FiniteTopology.from_masks(2, [0b00, 0b01, 0b11])


def from_topology(t: FiniteTopology) -> BasicPair:
    """(Ω, ∈, 𝒯): индекс i ↔ ``opens[i]``, x ⊩ i ⇔ x ∈ opens[i]."""
    formal = FiniteCarrier(len(t.opens), "𝒯")
    forces = Rel.from_pairs(
        t.ground,
        formal,
        ((x, i) for i, o in enumerate(t.opens) for x in o),
    )
    return BasicPair(t.ground, formal, forces)


def t0_points(t: FiniteTopology) -> tuple[Subset, ...]:
    """Классы топологической неразличимости, упорядоченные по наименьшему элементу."""
    classes: dict[tuple[bool, ...], int] = {}
    for x in t.ground.elements():
        signature = tuple(x in o for o in t.opens)
        classes[signature] = classes.get(signature, 0) | 1 << x
    return tuple(Subset(t.ground, mask) for mask in classes.values())


def enumerate_topologies(n: int) -> Iterator[FiniteTopology]:
    """Все топологии на n-точечном множестве, перебором семейств. n ≤ 4."""
    if not 0 <= n <= MAX_TOPOLOGY_GROUND:
        raise ModelCheckError(
            f"topologies are enumerated for 0..{MAX_TOPOLOGY_GROUND} points, got {n}"
        )
    full = (1 << n) - 1
    inner = list(range(1, full))
    base = {0, full}
    for choice in range(1 << len(inner)):
        family = base | {inner[i] for i in iter_bits(choice)}
        if _is_topology(family, full):
            yield FiniteTopology.from_masks(n, sorted(family))


def _intersection_of_opens(t: FiniteTopology, d: Subset) -> bool:
    """D равно пересечению всех открытых, содержащих D."""
    acc = t.ground.full_mask
    for o in t.opens:
        if not d.bits & ~o.bits:
            acc &= o.bits
    return acc == d.bits


def remark_clauses(t: FiniteTopology) -> Iterator[tuple[int, Subset, bool]]:
    """(номер утверждения, D, выполнено ли) для всех D ⊆ Ω и всех семи утверждений."""
    bp = from_topology(t)
    opens = t.open_masks()
    points = {p.bits for p in t0_points(t)}
    full = t.ground.full_mask

    for d in powerset(t.ground):
        is_open = d.bits in opens
        is_closed = (full & ~d.bits) in opens
        trivial = d.bits in (0, full)
        meet_of_opens = _intersection_of_opens(t, d)
        is_point = d.bits in points
        arrow = arrow_right(bp, d)

        yield 1, d, (d == ext(bp, box(bp, d))) == is_open
        yield 2, d, (d == rest(bp, diamond(bp, d))) == is_closed
        yield 3, d, (
            (d == ext(bp, diamond(bp, d))) == trivial
            and (d == rest(bp, box(bp, d))) == trivial
        )
        yield 4, d, (
            (d == ext(bp, arrow)) == (d.bits == full)
            and (d == arrow_left(bp, box(bp, d))) == (d.bits == 0)
        )
        yield 5, d, (d == arrow_left(bp, arrow)) == meet_of_opens
        yield 6, d, (d == rest(bp, arrow)) == (is_closed and is_point)
        yield 7, d, (d == arrow_left(bp, diamond(bp, d))) == (is_point and meet_of_opens)


def describe_topology(t: FiniteTopology) -> str:
    return f"|Ω|={t.ground.size} 𝒯={{" + ",".join(str(o) for o in t.opens) + "}"


def verify_remark(t: FiniteTopology) -> CheckReport:
    """Все семь утверждений для всех D ⊆ Ω; нарушения — в counterexamples.

    Пустое Ω не принимается: у него нет T₀-точек, и утверждения 6-7 вырождаются.
    """
    t.validate()
    if t.ground.size == 0:
        raise ModelCheckError("the topology bridge needs a non-empty ground set")
    instances = 0
    violations: list[Counterexample] = []
    for clause, d, holds in remark_clauses(t):
        instances += 1
        if not holds:
            violations.append(
                Counterexample(
                    key=(t.ground.size, clause, d.bits),
                    detail=f"{describe_topology(t)} clause {clause} fails for D={d}",
                )
            )
    return CheckReport(
        theorem_id="REMARK_TOPOLOGY",
        kind=SuiteKind.THEOREM,
        description=f"topology bridge on {describe_topology(t)}",
        instances=instances,
        counterexamples=sorted(violations),
    )
