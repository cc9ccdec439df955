"""Basic pair ``(X, ⊩, S)`` и его именованные операторы.

Конкретная сторона X — точки, формальная S — индексы базисных окрестностей.
Операторы — это четыре генерических образа из ``relations``, применённые к
⊩, плюс «стрелочные» ``D→`` / ``U←``:

    ext a   = ⊩⁻ a           ◇ x   = ⊩ x
    ◇ D     = ⊩ D            □ D   = ⊩⁻* D
    ext U   = ⊩⁻ U           rest U = ⊩* U
    D→      = {a | D ⊆ ext a}
    U←      = {x | U ⊆ ◇ x}

Открытость/замкнутость считаются через включения ``D ⊆ ext □ D`` и
``rest ◇ D ⊆ D``; сырые кванторные определения — в ``src.services.oracle``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .relations import (
    DimensionError,
    FiniteCarrier,
    Rel,
    Subset,
    col,
    existential_image,
    existential_preimage,
    iter_bits,
    require_carrier,
    row,
    universal_coimage,
    universal_preimage,
)


@dataclass(frozen=True, slots=True)
class BasicPair:
    concrete: FiniteCarrier
    formal: FiniteCarrier
    forces: Rel

    def __post_init__(self) -> None:
        if (
            self.forces.source.size != self.concrete.size
            or self.forces.target.size != self.formal.size
        ):
            raise DimensionError(
                f"forces is {self.forces.source.size}x{self.forces.target.size}, "
                f"pair is ({self.concrete.size}, {self.formal.size})"
            )

    @classmethod
    def from_rel(cls, forces: Rel) -> BasicPair:
        return cls(forces.source, forces.target, forces)

    @classmethod
    def from_masks(
        cls,
        n_concrete: int,
        n_formal: int,
        masks: Iterable[int],
        *,
        labels: tuple[str, str] = ("X", "S"),
    ) -> BasicPair:
        """``masks[x]`` — маска ◇x над S."""
        concrete = FiniteCarrier(n_concrete, labels[0])
        formal = FiniteCarrier(n_formal, labels[1])
        return cls(concrete, formal, Rel(concrete, formal, tuple(masks)))

    @classmethod
    def identity(cls, n: int) -> BasicPair:
        """``(n, =, n)``."""
        return cls.from_masks(n, n, (1 << x for x in range(n)))


def format_pair(bp: BasicPair) -> str:
    """Короткое описание для отчётов: ``(2,⊩,3) ext=[{0},{1},{0,1}]``."""
    exts = ",".join(str(ext_index(bp, a)) for a in bp.formal.elements())
    return f"({bp.concrete.size},⊩,{bp.formal.size}) ext=[{exts}]"


# --- Point / index operators ----------------------------------------------


def ext_index(bp: BasicPair, a: int) -> Subset:
    return col(bp.forces, a)


def diamond_point(bp: BasicPair, x: int) -> Subset:
    return row(bp.forces, x)


def ext_family(bp: BasicPair) -> tuple[Subset, ...]:
    return tuple(ext_index(bp, a) for a in bp.formal.elements())


# --- Subset operators ------------------------------------------------------


def diamond(bp: BasicPair, d: Subset) -> Subset:
    return existential_image(bp.forces, d)


def box(bp: BasicPair, d: Subset) -> Subset:
    return universal_coimage(bp.forces, d)


def ext(bp: BasicPair, u: Subset) -> Subset:
    return existential_preimage(bp.forces, u)


def rest(bp: BasicPair, u: Subset) -> Subset:
    return universal_preimage(bp.forces, u)


def arrow_right(bp: BasicPair, d: Subset) -> Subset:
    """``D→``: индексы, чья ext содержит всё D."""
    require_carrier(d, bp.concrete, "arrow_right")
    bits = 0
    for a, column in enumerate(bp.forces.cols):
        if not d.bits & ~column:
            bits |= 1 << a
    return Subset(bp.formal, bits)


def arrow_left(bp: BasicPair, u: Subset) -> Subset:
    """``U←``: точки, которые форсят каждый индекс из U."""
    require_carrier(u, bp.formal, "arrow_left")
    bits = 0
    for x, mask in enumerate(bp.forces.rows):
        if not u.bits & ~mask:
            bits |= 1 << x
    return Subset(bp.concrete, bits)


def intersection_of_exts(bp: BasicPair, u: Subset) -> Subset:
    """``⋂{ext a | a ε U}``; пустое семейство даёт всё X."""
    require_carrier(u, bp.formal, "intersection_of_exts")
    acc = bp.concrete.full_mask
    for a in iter_bits(u.bits):
        acc &= bp.forces.cols[a]
    return Subset(bp.concrete, acc)


# --- Classification --------------------------------------------------------


def is_open(bp: BasicPair, d: Subset) -> bool:
    """Открыто ⇔ ``D ⊆ ext □ D``."""
    return d <= ext(bp, box(bp, d))


def is_closed(bp: BasicPair, d: Subset) -> bool:
    """Замкнуто ⇔ ``rest ◇ D ⊆ D``."""
    return rest(bp, diamond(bp, d)) <= d


def is_clopen(bp: BasicPair, d: Subset) -> bool:
    return is_open(bp, d) and is_closed(bp, d)


# --- Axioms ----------------------------------------------------------------


def satisfies_b1(bp: BasicPair) -> bool:
    """B1: ``ext a ∩ ext b`` равно объединению всех ``ext c`` внутри него."""
    cols = bp.forces.cols
    for a in cols:
        for b in cols:
            meet = a & b
            union = 0
            for c in cols:
                if not c & ~meet:
                    union |= c
            if union != meet:
                return False
    return True


def satisfies_b2(bp: BasicPair) -> bool:
    """B2: ``X = ext S`` — каждая точка форсит хотя бы один индекс."""
    return all(bp.forces.rows)


def is_hausdorff(bp: BasicPair) -> bool:
    """T₂: точки, все окрестности которых попарно пересекаются, совпадают.

    Для |X| ≤ 1 выполняется тривиально.
    """
    rows, cols = bp.forces.rows, bp.forces.cols
    for x, row_x in enumerate(rows):
        for x2 in range(x + 1, len(rows)):
            row_x2 = rows[x2]
            inseparable = all(
                cols[a] & cols[a2]
                for a in iter_bits(row_x)
                for a2 in iter_bits(row_x2)
            )
            if inseparable:
                return False
    return True
