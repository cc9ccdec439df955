"""Unit-тесты границ перебора и детерминированной нумерации моделей."""
from __future__ import annotations

import pytest

from src.services.modelcheck.base import EnumSpec, ModelCheckError, pairs_up_to
from src.services.modelcheck.enumeration import (
    basic_pairs_of_size,
    enumerate_basic_pairs,
    enumerate_relation_instances,
    pair_key,
    sample_relation_instances,
)


class TestEnumSpec:
    @pytest.mark.parametrize("field", ["max_x", "max_s", "sample_size", "sample_dim"])
    def test_negative_bounds_rejected(self, field: str) -> None:
        """Отрицательная граница — ModelCheckError."""
        with pytest.raises(ModelCheckError):
            EnumSpec(**{field: -1})

    def test_remark_ground_capped(self) -> None:
        """Топологии перебираются максимум на 4 точках."""
        with pytest.raises(ModelCheckError):
            EnumSpec(remark_max_ground=5)

    def test_relation_bounds_cap_concrete_side(self) -> None:
        """X и S режутся до 2, Y и T берутся как заданы."""
        spec = EnumSpec(max_x=3, max_s=3, max_y=1, max_t=2)
        assert spec.relation_bounds() == (2, 2, 1, 2)

    @pytest.mark.parametrize("bound, expected", [(0, 1), (1, 5), (2, 31), (3, 689)])
    def test_basic_pair_count(self, bound: int, expected: int) -> None:
        """Σ 2^(|X|·|S|) по всем размерам до границы."""
        assert pairs_up_to(bound, bound) == expected
        assert EnumSpec(max_x=bound, max_s=bound).basic_pair_count() == expected


class TestBasicPairs:
    def test_each_pair_once_in_order(self) -> None:
        """Ключи уникальны и идут по возрастанию."""
        spec = EnumSpec(max_x=2, max_s=2)
        keys = [pair_key(bp) for bp in enumerate_basic_pairs(spec)]
        assert len(keys) == 31
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert keys[0] == (0, 0, 0)
        assert keys[-1] == (2, 2, 15)

    def test_witness_pair_key(self) -> None:
        """Пара-свидетель стоит на индексе 53 среди (2, 3)."""
        keys = [pair_key(bp) for bp in basic_pairs_of_size(2, 3)]
        assert keys[53] == (2, 3, 53)
        bp = list(basic_pairs_of_size(2, 3))[53]
        assert bp.forces.rows == (0b101, 0b110)


class TestRelations:
    def test_exhaustive_count(self) -> None:
        """Число экземпляров совпадает с формулой в EnumSpec."""
        spec = EnumSpec(max_x=1, max_s=1, max_y=1, max_t=1, sample_size=0)
        instances = list(enumerate_relation_instances(spec))
        assert len(instances) == spec.relation_instance_count() == 34

    def test_sample_is_seeded(self) -> None:
        """Один seed — одна и та же выборка нужного размера."""
        spec = EnumSpec(sample_size=5, sample_dim=3, seed=7)
        first = [(ps, r) for ps, r in sample_relation_instances(spec)]
        second = [(ps, r) for ps, r in sample_relation_instances(spec)]
        assert first == second
        assert len(first) == 5
        assert all(ps.cx.concrete.size == 3 and r.target.size == 3 for ps, r in first)

    def test_other_seed_differs(self) -> None:
        """Другой seed — другая выборка."""
        a = list(sample_relation_instances(EnumSpec(sample_size=5, seed=1)))
        b = list(sample_relation_instances(EnumSpec(sample_size=5, seed=2)))
        assert a != b
