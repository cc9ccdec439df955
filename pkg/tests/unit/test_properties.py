"""Алгебраические законы на случайных маленьких basic pairs (hypothesis)."""
from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from src.services.basic_pair import (
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
from src.services.oracle import (
    closed_by_definition,
    continuous_by_definition,
    continuous_by_diamond,
    naive_existential_image,
    naive_universal_preimage,
    open_by_definition,
)
from src.services.rel_communication import (
    PairedSetting,
    is_continuous,
    is_rel_communicable,
    rel_equiv_concrete,
    restriction_of,
    round_trip,
    sigma,
)
from src.services.relations import Rel, Subset


@st.composite
def basic_pairs(draw, max_size: int = 4) -> BasicPair:
    nx = draw(st.integers(0, max_size))
    ns = draw(st.integers(0, max_size))
    masks = draw(st.lists(st.integers(0, (1 << ns) - 1), min_size=nx, max_size=nx))
    return BasicPair.from_masks(nx, ns, masks)


@st.composite
def pair_with_subsets(draw):
    bp = draw(basic_pairs())
    d = Subset(bp.concrete, draw(st.integers(0, bp.concrete.full_mask)))
    e = Subset(bp.concrete, draw(st.integers(0, bp.concrete.full_mask)))
    u = Subset(bp.formal, draw(st.integers(0, bp.formal.full_mask)))
    return bp, d, e, u


@st.composite
def relation_instances(draw):
    cx = draw(basic_pairs(max_size=3))
    cy = draw(basic_pairs(max_size=3))
    rows = draw(
        st.lists(
            st.integers(0, cy.concrete.full_mask),
            min_size=cx.concrete.size,
            max_size=cx.concrete.size,
        )
    )
    return PairedSetting(cx, cy), Rel(cx.concrete, cy.concrete, tuple(rows))


class TestAdjunctions:
    @given(pair_with_subsets())
    def test_ext_box(self, case) -> None:
        """ext U ⊆ D ⇔ U ⊆ □D."""
        bp, d, _, u = case
        assert (ext(bp, u) <= d) == (u <= box(bp, d))

    @given(pair_with_subsets())
    def test_diamond_rest(self, case) -> None:
        """D ⊆ rest U ⇔ ◇D ⊆ U."""
        bp, d, _, u = case
        assert (d <= rest(bp, u)) == (diamond(bp, d) <= u)

    @given(pair_with_subsets())
    def test_arrows_galois(self, case) -> None:
        """D ⊆ U← ⇔ U ⊆ D→."""
        bp, d, _, u = case
        assert (d <= arrow_left(bp, u)) == (u <= arrow_right(bp, d))


class TestMonotonicity:
    @given(pair_with_subsets())
    def test_diamond_box_monotone(self, case) -> None:
        """◇ и □ монотонны."""
        bp, d, e, _ = case
        lo, hi = d & e, d | e
        assert diamond(bp, lo) <= diamond(bp, hi)
        assert box(bp, lo) <= box(bp, hi)

    @given(pair_with_subsets())
    def test_arrow_antitone(self, case) -> None:
        """Больше D — меньше D→."""
        bp, d, e, _ = case
        assert arrow_right(bp, d | e) <= arrow_right(bp, d & e)


class TestFixpoints:
    @given(pair_with_subsets())
    def test_interior_and_closure_bounds(self, case) -> None:
        """ext□D ⊆ D ⊆ rest◇D."""
        bp, d, _, _ = case
        assert ext(bp, box(bp, d)) <= d <= rest(bp, diamond(bp, d))

    @given(pair_with_subsets())
    def test_ext_is_open_rest_is_closed(self, case) -> None:
        """ext U открыто, rest U замкнуто."""
        bp, _, _, u = case
        assert is_open(bp, ext(bp, u))
        assert is_closed(bp, rest(bp, u))

    @given(pair_with_subsets())
    def test_arrow_closure_idempotent(self, case) -> None:
        """(D→)← — оператор замыкания."""
        bp, d, _, _ = case
        closure = arrow_left(bp, arrow_right(bp, d))
        assert d <= closure
        assert arrow_left(bp, arrow_right(bp, closure)) == closure


class TestRelationLaws:
    @settings(max_examples=150)
    @given(relation_instances())
    def test_continuity_is_communicability(self, case) -> None:
        """Непрерывность ⇔ (σ,ρ)-коммуницируемость."""
        ps, r = case
        assert is_continuous(ps, r) == is_rel_communicable(ps, r)

    @given(relation_instances())
    def test_round_trip_shrinks_sigma(self, case) -> None:
        """σ(ρ(σ r)) ⊆ σ r; равенства в общем случае нет."""
        ps, r = case
        assert restriction_of(sigma(ps, round_trip(ps, r)), sigma(ps, r))

    @given(relation_instances())
    def test_concrete_equivalence_laws(self, case) -> None:
        """Рефлексивность ~ и симметрия на паре (r, ρ(σ r))."""
        ps, r = case
        back = round_trip(ps, r)
        assert rel_equiv_concrete(ps, r, r)
        assert rel_equiv_concrete(ps, r, back) == rel_equiv_concrete(ps, back, r)


class TestOracles:
    @given(pair_with_subsets())
    def test_open_and_closed_match_definitions(self, case) -> None:
        """Битовые open/closed совпадают с определением через окрестности."""
        bp, d, _, _ = case
        assert is_open(bp, d) == open_by_definition(bp, d)
        assert is_closed(bp, d) == closed_by_definition(bp, d)

    @given(pair_with_subsets())
    def test_diamond_and_rest_match_quantifiers(self, case) -> None:
        """◇ и rest совпадают с кванторными определениями."""
        bp, d, _, u = case
        assert diamond(bp, d) == naive_existential_image(bp.forces, d)
        assert rest(bp, u) == naive_universal_preimage(bp.forces, u)

    @settings(max_examples=150)
    @given(relation_instances())
    def test_continuity_matches_definitions(self, case) -> None:
        """Три формы непрерывности дают один ответ."""
        ps, r = case
        assert is_continuous(ps, r) == continuous_by_definition(ps, r) == continuous_by_diamond(ps, r)
