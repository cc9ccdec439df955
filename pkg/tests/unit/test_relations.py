"""Unit-тесты конечных носителей, подмножеств, отношений и четырёх образов."""
from __future__ import annotations

import pytest

from src.services.oracle import (
    naive_existential_image,
    naive_existential_preimage,
    naive_universal_coimage,
    naive_universal_preimage,
)
from src.services.relations import (
    DimensionError,
    ElementOutOfRange,
    FiniteCarrier,
    Rel,
    RelationError,
    Subset,
    all_relations,
    compose,
    existential_image,
    existential_preimage,
    iter_bits,
    overlaps,
    powerset,
    universal_coimage,
    universal_preimage,
)

X = FiniteCarrier(3, "X")
Y = FiniteCarrier(2, "Y")


class TestSubset:
    def test_iteration_ascending_and_str(self) -> None:
        """Элементы идут по возрастанию, str — литерал {…}."""
        d = Subset(X, 0b101)
        assert list(d) == [0, 2]
        assert str(d) == "{0,2}"
        assert str(Subset.empty(X)) == "{}"
        assert len(d) == 2

    def test_membership(self) -> None:
        """Чужие значения и нецелые не входят, без исключений."""
        d = Subset.of(X, [1])
        assert 1 in d
        assert 0 not in d
        assert -1 not in d
        assert "1" not in d

    def test_algebra(self) -> None:
        """∩, ∪, дополнение и ⊆ на масках."""
        a, b = Subset.of(X, [0, 1]), Subset.of(X, [1, 2])
        assert (a & b) == Subset.of(X, [1])
        assert (a | b) == Subset.full(X)
        assert a.complement() == Subset.of(X, [2])
        assert Subset.of(X, [1]) <= a
        assert not a <= b
        assert Subset.empty(X).is_empty()

    def test_label_does_not_affect_equality(self) -> None:
        """Метка носителя только для вывода."""
        assert Subset(FiniteCarrier(3, "X"), 1) == Subset(FiniteCarrier(3, "Ω"), 1)

    def test_mask_outside_carrier_rejected(self) -> None:
        """Бит за пределами носителя — ошибка."""
        with pytest.raises(DimensionError):
            Subset(X, 0b1000)

    def test_element_out_of_range(self) -> None:
        """Элемент за пределами носителя отклоняется."""
        with pytest.raises(ElementOutOfRange):
            Subset.of(X, [3])

    def test_carrier_mismatch(self) -> None:
        """Операции над подмножествами разных носителей запрещены."""
        with pytest.raises(DimensionError):
            Subset.of(X, [0]) & Subset.of(Y, [0])

    def test_negative_carrier(self) -> None:
        """Отрицательный размер носителя отклоняется."""
        with pytest.raises(RelationError):
            FiniteCarrier(-1)

    def test_powerset_order(self) -> None:
        """Порядок перебора — по маске, у пустого носителя одно подмножество."""
        assert [d.bits for d in powerset(Y)] == [0, 1, 2, 3]
        assert [d.bits for d in powerset(FiniteCarrier(0))] == [0]


def test_iter_bits() -> None:
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b10110)) == [1, 2, 4]


class TestRel:
    def test_from_pairs_rows_and_cols(self) -> None:
        """Строки и столбцы согласованы с парами."""
        r = Rel.from_pairs(X, Y, [(0, 1), (2, 0), (2, 1)])
        assert r.rows == (0b10, 0b00, 0b11)
        assert r.cols == (0b100, 0b101)
        assert r.holds(2, 0)
        assert not r.holds(1, 1)
        assert sorted(r.pairs()) == [(0, 1), (2, 0), (2, 1)]

    @pytest.mark.parametrize("index", [0, 1, 5, 37, 63])
    def test_index_round_trip(self, index: int) -> None:
        assert Rel.from_index(X, Y, index).index == index

    def test_witness_matrix_index(self) -> None:
        """Индекс матрицы пары-свидетеля (2, ⊩, 3)."""
        # строки {0,2} и {1,2} над S = 3
        s = FiniteCarrier(3)
        r = Rel(FiniteCarrier(2), s, (0b101, 0b110))
        assert r.index == 53

    def test_index_out_of_range(self) -> None:
        """Индекс ≥ 2^(|A|·|B|) не соответствует отношению."""
        with pytest.raises(DimensionError):
            Rel.from_index(X, Y, 64)

    def test_ragged_rows_rejected(self) -> None:
        """Неверное число строк или лишний бит в строке."""
        with pytest.raises(DimensionError):
            Rel(X, Y, (0, 0))
        with pytest.raises(DimensionError):
            Rel(X, Y, (0, 0, 0b100))

    def test_named_relations(self) -> None:
        assert Rel.empty(X, Y).rows == (0, 0, 0)
        assert Rel.full(X, Y).rows == (3, 3, 3)
        assert Rel.identity(Y).rows == (1, 2)

    def test_all_relations_count(self) -> None:
        """2^(n·m) отношений в порядке индекса."""
        rels = list(all_relations(Y, Y))
        assert len(rels) == 16
        assert [r.index for r in rels] == list(range(16))
        assert len(list(all_relations(FiniteCarrier(0), Y))) == 1

    def test_compose(self) -> None:
        """s ∘ r и проверка стыковки носителей."""
        r = Rel.from_pairs(X, Y, [(0, 0), (1, 1)])
        s = Rel.from_pairs(Y, X, [(0, 2), (1, 0), (1, 1)])
        assert sorted(compose(s, r).pairs()) == [(0, 2), (1, 0), (1, 1)]
        with pytest.raises(DimensionError):
            compose(r, r)


class TestImages:
    r = Rel.from_pairs(X, Y, [(0, 0), (1, 0), (1, 1)])

    def test_existential_image(self) -> None:
        """◇: точки цели, видимые хотя бы из одной точки D."""
        assert existential_image(self.r, Subset.of(X, [1])) == Subset.full(Y)
        assert existential_image(self.r, Subset.of(X, [2])) == Subset.empty(Y)

    def test_universal_coimage(self) -> None:
        """□: точки цели, все прообразы которых лежат в D."""
        # r⁻ 0 = {0,1}, r⁻ 1 = {1}
        assert universal_coimage(self.r, Subset.of(X, [1])) == Subset.of(Y, [1])
        assert universal_coimage(self.r, Subset.of(X, [0, 1])) == Subset.full(Y)

    def test_existential_preimage(self) -> None:
        assert existential_preimage(self.r, Subset.of(Y, [1])) == Subset.of(X, [1])

    def test_universal_preimage(self) -> None:
        # x = 2 ничего не видит, поэтому попадает в любой r* E
        assert universal_preimage(self.r, Subset.of(Y, [0])) == Subset.of(X, [0, 2])
        assert universal_preimage(self.r, Subset.empty(Y)) == Subset.of(X, [2])

    def test_wrong_carrier(self) -> None:
        """Подмножество цели вместо источника — DimensionError."""
        with pytest.raises(DimensionError):
            existential_image(self.r, Subset.of(Y, [0]))

    def test_overlaps(self) -> None:
        assert overlaps(Subset.of(X, [0, 1]), Subset.of(X, [1]))
        assert not overlaps(Subset.of(X, [0]), Subset.of(X, [1, 2]))


@pytest.mark.parametrize("n_source, n_target", [(n, m) for n in range(4) for m in range(4)])
def test_bitset_images_match_quantifier_definitions(n_source: int, n_target: int) -> None:
    """Все отношения до 3×3 и все подмножества: битовые образы совпадают с кванторными."""
    source, target = FiniteCarrier(n_source), FiniteCarrier(n_target)
    for r in all_relations(source, target):
        _assert_images_match(r)


def _assert_images_match(r: Rel) -> None:
    for d in powerset(r.source):
        assert existential_image(r, d) == naive_existential_image(r, d)
        assert universal_coimage(r, d) == naive_universal_coimage(r, d)
    for e in powerset(r.target):
        assert existential_preimage(r, e) == naive_existential_preimage(r, e)
        assert universal_preimage(r, e) == naive_universal_preimage(r, e)
