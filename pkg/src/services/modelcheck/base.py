"""Базовые типы model checker'а: границы перебора, отчёт, ошибки.

Сьют — это одна теорема (или заведомая не-теорема) теории basic pairs, проверенная
перебором всех моделей в границах ``EnumSpec``. Итог — ``CheckReport`` со
списком контрпримеров, отсортированных по каноническому ключу.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from src.core.config import (
    DEFAULT_MAX_S,
    DEFAULT_MAX_T,
    DEFAULT_MAX_X,
    DEFAULT_MAX_Y,
    DEFAULT_SEED,
    MAX_TOPOLOGY_GROUND,
    RELATION_SWEEP_MAX,
    REMARK_MAX_GROUND,
    SAMPLE_DIM,
    SAMPLE_SIZE,
)


class SuiteKind(str, Enum):
    THEOREM = "theorem"              # PASS ⇔ контрпримеров нет
    NON_THEOREM = "non_theorem"      # PASS ⇔ контрпример найден


class ModelCheckError(Exception):
    """Базовая ошибка model checker'а (некорректные границы и т.п.)."""


class UnknownTheorem(ModelCheckError):
    """Идентификатор не зарегистрирован в сьюте."""


class InvalidTopology(ModelCheckError):
    """Семейство не содержит ∅/Ω или не замкнуто по ∪/∩."""


@dataclass(frozen=True, slots=True)
class EnumSpec:
    """Границы перебора.

    ``max_x``/``max_s`` — для сьютов по подмножествам. В сьютах по отношениям
    X и S дополнительно режутся до ``RELATION_SWEEP_MAX``, а Y/T берут
    ``max_y``/``max_t`` (по умолчанию BP_MAX_Y/BP_MAX_T).
    """

    max_x: int = DEFAULT_MAX_X
    max_s: int = DEFAULT_MAX_S
    max_y: Optional[int] = None
    max_t: Optional[int] = None
    sample_size: int = SAMPLE_SIZE
    sample_dim: int = SAMPLE_DIM
    seed: int = DEFAULT_SEED
    remark_max_ground: int = REMARK_MAX_GROUND

    def __post_init__(self) -> None:
        bounds = {
            "max_x": self.max_x,
            "max_s": self.max_s,
            "max_y": self.max_y or 0,
            "max_t": self.max_t or 0,
            "sample_size": self.sample_size,
            "sample_dim": self.sample_dim,
            "remark_max_ground": self.remark_max_ground,
        }
        for name, value in bounds.items():
            if value < 0:
                raise ModelCheckError(f"{name} must be >= 0, got {value}")
        if self.remark_max_ground > MAX_TOPOLOGY_GROUND:
            raise ModelCheckError(
                f"remark_max_ground must be <= {MAX_TOPOLOGY_GROUND}, "
                f"got {self.remark_max_ground}"
            )

    def relation_bounds(self) -> tuple[int, int, int, int]:
        """(|X|, |S|, |Y|, |T|) для исчерпывающих relation-сьютов."""
        cap = RELATION_SWEEP_MAX
        return (
            min(self.max_x, cap),
            min(self.max_s, cap),
            DEFAULT_MAX_Y if self.max_y is None else self.max_y,
            DEFAULT_MAX_T if self.max_t is None else self.max_t,
        )

    def basic_pair_count(self) -> int:
        return pairs_up_to(self.max_x, self.max_s)

    def relation_instance_count(self) -> int:
        """Число троек (cx, cy, r) в исчерпывающей части relation-сьюта."""
        mx, ms, my, mt = self.relation_bounds()
        total = 0
        for nx in range(mx + 1):
            left = sum(1 << (nx * ns) for ns in range(ms + 1))
            for ny in range(my + 1):
                right = sum(1 << (ny * nt) for nt in range(mt + 1))
                total += left * right * (1 << (nx * ny))
        return total


def pairs_up_to(max_x: int, max_s: int) -> int:
    return sum(1 << (nx * ns) for nx in range(max_x + 1) for ns in range(max_s + 1))


@dataclass(frozen=True, slots=True, order=True)
class Counterexample:
    """Свидетель нарушения. Сортируется и сравнивается только по ``key``."""

    key: tuple[int, ...]
    detail: str = field(compare=False)


@dataclass(slots=True)
class CheckReport:
    theorem_id: str
    kind: SuiteKind
    description: str
    instances: int
    counterexamples: list[Counterexample]
    sampled: int = 0
    seed: Optional[int] = None
    missing_witness: bool = False            # не найден обязательный свидетель
    elapsed_sec: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        if self.kind is SuiteKind.THEOREM:
            return not self.counterexamples
        return bool(self.counterexamples) and not self.missing_witness
