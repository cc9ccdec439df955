"""Конечные носители, подмножества и отношения — фундамент всех операторов.

Подмножество хранится как битовая маска поверх носителя (бит i ⇔ элемент i),
отношение — как кортеж строк-масок над целевым носителем. Все значения
иммутабельны, все операции чистые: их можно гонять из разных воркеров
model checker'а без синхронизации.

Четыре оператора образов (r D, r⁻* D, r⁻ E, r* E) считаются битовой
алгеброй. Наивные кванторные версии тех же операторов — в
``src.services.oracle``; тесты сверяют одно с другим.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class RelationError(Exception):
    """Базовая ошибка конечной реляционной алгебры."""


class DimensionError(RelationError):
    """Носители аргументов не совпадают по размеру."""


class ElementOutOfRange(RelationError):
    """Индекс элемента за пределами носителя."""


def iter_bits(mask: int) -> Iterator[int]:
    """Позиции установленных битов по возрастанию."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- Carrier / Subset ------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FiniteCarrier:
    """Конечное множество позиций ``0..size-1``.

    Равенство структурное: сравнивается только ``size``. ``label`` нужен
    людям (X, S, Y, T в отчётах), на семантику не влияет.
    """

    size: int
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.size < 0:
            raise RelationError(f"carrier size must be >= 0, got {self.size}")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def elements(self) -> range:
        return range(self.size)

    def check(self, element: int) -> int:
        if not 0 <= element < self.size:
            raise ElementOutOfRange(
                f"element {element} is outside carrier "
                f"{self.label or '?'} of size {self.size}"
            )
        return element


@dataclass(frozen=True, slots=True)
class Subset:
    """Экстенсиональное подмножество одного носителя."""

    carrier: FiniteCarrier
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits & ~self.carrier.full_mask:
            raise DimensionError(
                f"mask {self.bits:#b} does not fit carrier of size {self.carrier.size}"
            )

    @classmethod
    def of(cls, carrier: FiniteCarrier, elements: Iterable[int]) -> Subset:
        bits = 0
        for element in elements:
            bits |= 1 << carrier.check(element)
        return cls(carrier, bits)

    @classmethod
    def empty(cls, carrier: FiniteCarrier) -> Subset:
        return cls(carrier, 0)

    @classmethod
    def full(cls, carrier: FiniteCarrier) -> Subset:
        return cls(carrier, carrier.full_mask)

    def __contains__(self, element: object) -> bool:
        if not isinstance(element, int) or element < 0:
            return False
        return bool(self.bits >> element & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self) + "}"

    def _same_carrier(self, other: Subset) -> None:
        if self.carrier.size != other.carrier.size:
            raise DimensionError(
                f"subsets over carriers of size {self.carrier.size} "
                f"and {other.carrier.size}"
            )

    def __and__(self, other: Subset) -> Subset:
        self._same_carrier(other)
        return Subset(self.carrier, self.bits & other.bits)

    def __or__(self, other: Subset) -> Subset:
        self._same_carrier(other)
        return Subset(self.carrier, self.bits | other.bits)

    def complement(self) -> Subset:
        return Subset(self.carrier, ~self.bits & self.carrier.full_mask)

    def issubset(self, other: Subset) -> bool:
        self._same_carrier(other)
        return not self.bits & ~other.bits

    __le__ = issubset

    def is_empty(self) -> bool:
        return self.bits == 0


def powerset(carrier: FiniteCarrier) -> Iterator[Subset]:
    """Все подмножества носителя, по возрастанию маски."""
    for bits in range(1 << carrier.size):
        yield Subset(carrier, bits)


def require_carrier(subset: Subset, carrier: FiniteCarrier, role: str) -> None:
    if subset.carrier.size != carrier.size:
        raise DimensionError(
            f"{role}: subset over carrier of size {subset.carrier.size}, "
            f"expected {carrier.size}"
        )


# --- Relation --------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Rel:
    """Отношение ``source → target`` как булева матрица по строкам.

    ``rows[x]`` — маска ``r x`` над target; ``cols[y]`` — маска ``r⁻ y``
    над source, выводится из строк при создании.
    """

    source: FiniteCarrier
    target: FiniteCarrier
    rows: tuple[int, ...]
    cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        if len(rows) != self.source.size:
            raise DimensionError(
                f"relation has {len(rows)} rows, source size is {self.source.size}"
            )
        full = self.target.full_mask
        cols = [0] * self.target.size
        for x, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise DimensionError(
                    f"row {x} mask {row:#b} does not fit target of size {self.target.size}"
                )
            for y in iter_bits(row):
                cols[y] |= 1 << x
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", tuple(cols))

    # --- constructors ----------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        source: FiniteCarrier,
        target: FiniteCarrier,
        pairs: Iterable[tuple[int, int]],
    ) -> Rel:
        rows = [0] * source.size
        for x, y in pairs:
            rows[source.check(x)] |= 1 << target.check(y)
        return cls(source, target, tuple(rows))

    @classmethod
    def from_index(cls, source: FiniteCarrier, target: FiniteCarrier, index: int) -> Rel:
        """Матрица из little-endian целого: бит ``x*|target| + y`` ⇔ r(x, y)."""
        width = target.size
        if not 0 <= index < 1 << (source.size * width):
            raise DimensionError(
                f"index {index} out of range for {source.size}x{width} matrix"
            )
        full = target.full_mask
        return cls(
            source,
            target,
            tuple((index >> (x * width)) & full for x in source.elements()),
        )

    @classmethod
    def empty(cls, source: FiniteCarrier, target: FiniteCarrier) -> Rel:
        return cls(source, target, (0,) * source.size)

    @classmethod
    def full(cls, source: FiniteCarrier, target: FiniteCarrier) -> Rel:
        return cls(source, target, (target.full_mask,) * source.size)

    @classmethod
    def identity(cls, carrier: FiniteCarrier) -> Rel:
        return cls(carrier, carrier, tuple(1 << x for x in carrier.elements()))

    # --- accessors -------------------------------------------------------

    @property
    def index(self) -> int:
        width = self.target.size
        value = 0
        for x, row in enumerate(self.rows):
            value |= row << (x * width)
        return value

    def holds(self, x: int, y: int) -> bool:
        return bool(self.rows[self.source.check(x)] >> self.target.check(y) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in iter_bits(row):
                yield x, y

    def same_shape(self, other: Rel) -> bool:
        return (
            self.source.size == other.source.size
            and self.target.size == other.target.size
        )


def all_relations(source: FiniteCarrier, target: FiniteCarrier) -> Iterator[Rel]:
    """Все отношения source → target в порядке little-endian индекса."""
    for index in range(1 << (source.size * target.size)):
        yield Rel.from_index(source, target, index)


# --- Operators -------------------------------------------------------------


def overlaps(d: Subset, e: Subset) -> bool:
    """``d ≬ e``: есть общий элемент."""
    d._same_carrier(e)
    return bool(d.bits & e.bits)


def row(r: Rel, x: int) -> Subset:
    """``r x = {y | r(x, y)}``."""
    return Subset(r.target, r.rows[r.source.check(x)])


def col(r: Rel, y: int) -> Subset:
    """``r⁻ y = {x | r(x, y)}``."""
    return Subset(r.source, r.cols[r.target.check(y)])


def existential_image(r: Rel, d: Subset) -> Subset:
    """``r D = {y | r⁻ y ≬ D}``."""
    require_carrier(d, r.source, "existential_image")
    bits = 0
    for x in iter_bits(d.bits):
        bits |= r.rows[x]
    return Subset(r.target, bits)


def universal_coimage(r: Rel, d: Subset) -> Subset:
    """``r⁻* D = {y | r⁻ y ⊆ D}``."""
    require_carrier(d, r.source, "universal_coimage")
    outside = ~d.bits & r.source.full_mask
    bits = 0
    for y, column in enumerate(r.cols):
        if not column & outside:
            bits |= 1 << y
    return Subset(r.target, bits)


def existential_preimage(r: Rel, e: Subset) -> Subset:
    """``r⁻ E = {x | r x ≬ E}``."""
    require_carrier(e, r.target, "existential_preimage")
    bits = 0
    for x, mask in enumerate(r.rows):
        if mask & e.bits:
            bits |= 1 << x
    return Subset(r.source, bits)


def universal_preimage(r: Rel, e: Subset) -> Subset:
    """``r* E = {x | r x ⊆ E}``."""
    require_carrier(e, r.target, "universal_preimage")
    outside = ~e.bits & r.target.full_mask
    bits = 0
    for x, mask in enumerate(r.rows):
        if not mask & outside:
            bits |= 1 << x
    return Subset(r.source, bits)


def compose(s: Rel, r: Rel) -> Rel:
    """``s ∘ r`` для r: A→B и s: B→C; результат A→C."""
    if r.target.size != s.source.size:
        raise DimensionError(
            f"cannot compose: r targets size {r.target.size}, "
            f"s starts at size {s.source.size}"
        )
    rows = []
    for mask in r.rows:
        acc = 0
        for b in iter_bits(mask):
            acc |= s.rows[b]
        rows.append(acc)
    return Rel(r.source, s.target, tuple(rows))
