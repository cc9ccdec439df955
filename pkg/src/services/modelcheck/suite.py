"""Реестр сьютов: каждая теорема — исчерпывающая проверка на малых моделях.

Сьют регистрируется декоратором ``@_register`` и получает на вход границы
``EnumSpec`` и ``_Tally``, в который складывает проверенные случаи и
контрпримеры. ``check_theorem`` оборачивает прогон в ``CheckReport``;
``run_suite`` гоняет список сьютов, опционально в пуле процессов.

Ключи контрпримеров — кортежи целых одинаковой длины внутри сьюта:
для подмножеств ``(|X|, |S|, индекс ⊩, пункт, маска1, маска2)``, для
отношений ``(выборка?, номер, *pair_key(cx), *pair_key(cy), индекс r)``.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import Callable, Iterable, Iterator, Optional

from src.services.basic_pair import (
    BasicPair,
    arrow_left,
    arrow_right,
    box,
    diamond,
    diamond_point,
    ext,
    format_pair,
    intersection_of_exts,
    is_closed,
    is_hausdorff,
    is_open,
    rest,
    satisfies_b2,
)
from src.services.communication import Strategy, is_communicable_a, subset_systems
from src.services.oracle import (
    closed_by_definition,
    continuous_by_definition,
    continuous_by_diamond,
    open_by_definition,
)
from src.services.rel_communication import (
    PairedSetting,
    basic_preimages,
    is_continuous,
    is_function,
    is_rel_communicable,
    is_single_valued,
    point_images,
    restriction_of,
    rho,
    round_trip,
    sigma,
)
from src.services.relations import Rel, Subset, all_relations, overlaps, powerset

from .base import CheckReport, Counterexample, EnumSpec, SuiteKind, UnknownTheorem
from .enumeration import (
    enumerate_basic_pairs,
    enumerate_relation_instances,
    enumerate_settings,
    pair_key,
    sample_relation_instances,
)
from .topology import (
    describe_topology,
    enumerate_topologies,
    from_topology,
    remark_clauses,
)

logger = logging.getLogger(__name__)

Key = tuple[int, ...]


class _Tally:
    """Счётчик проверенных случаев + контрпримеры."""

    __slots__ = ("instances", "sampled", "counterexamples")

    def __init__(self) -> None:
        self.instances = 0
        self.sampled = 0
        self.counterexamples: list[Counterexample] = []

    def check(
        self,
        holds: bool,
        key: Key,
        detail: Callable[[], str],
        *,
        sampled: bool = False,
    ) -> None:
        self.instances += 1
        if sampled:
            self.sampled += 1
        if not holds:
            self.counterexamples.append(Counterexample(key, detail()))


Sweep = Callable[[EnumSpec, _Tally], None]


@dataclass(frozen=True, slots=True)
class Theorem:
    theorem_id: str
    kind: SuiteKind
    description: str
    sweep: Sweep
    # Ключи, которые обязаны попасть в контрпримеры не-теоремы при данных границах.
    required_witnesses: Optional[Callable[[EnumSpec], tuple[Key, ...]]] = None
    sampled: bool = False


THEOREMS: dict[str, Theorem] = {}


def _register(
    theorem_id: str,
    description: str,
    *,
    kind: SuiteKind = SuiteKind.THEOREM,
    required_witnesses: Optional[Callable[[EnumSpec], tuple[Key, ...]]] = None,
    sampled: bool = False,
) -> Callable[[Sweep], Sweep]:
    def decorator(sweep: Sweep) -> Sweep:
        THEOREMS[theorem_id] = Theorem(
            theorem_id=theorem_id,
            kind=kind,
            description=description,
            sweep=sweep,
            required_witnesses=required_witnesses,
            sampled=sampled,
        )
        return sweep

    return decorator


def converse_de_witness() -> BasicPair:
    """(2, ⊩, 3) с ``x ⊩ y ⇔ x = y ∨ y = 2``: строки {0,2} и {1,2}."""
    return BasicPair.from_masks(2, 3, (0b101, 0b110))


paper_counterexample = converse_de_witness


# --- helpers ---------------------------------------------------------------


def _subset_pairs(
    spec: EnumSpec,
    *,
    only: Optional[Callable[[BasicPair], bool]] = None,
) -> Iterator[tuple[BasicPair, Key, list[Subset], list[Subset]]]:
    for bp in enumerate_basic_pairs(spec):
        if only is not None and not only(bp):
            continue
        yield bp, pair_key(bp), list(powerset(bp.concrete)), list(powerset(bp.formal))


def _about(bp: BasicPair, **subjects: Subset) -> Callable[[], str]:
    def render() -> str:
        parts = " ".join(f"{name}={value}" for name, value in subjects.items())
        return f"{format_pair(bp)} {parts}".rstrip()

    return render


# --- Prop. 1: monotonicity and adjunctions ---------------------------------


@_register(
    "THM_PROP1",
    "◇,□,ext,rest monotone; ext ⊣ □; ◇ ⊣ rest; ext□D ⊆ D ⊆ rest◇D",
)
def _sweep_prop1(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, ss in _subset_pairs(spec):
        for d in xs:
            for e in xs:
                if d <= e:
                    tally.check(
                        diamond(bp, d) <= diamond(bp, e) and box(bp, d) <= box(bp, e),
                        key + (0, d.bits, e.bits),
                        _about(bp, D=d, E=e),
                    )
            for u in ss:
                tally.check(
                    (ext(bp, u) <= d) == (u <= box(bp, d)),
                    key + (1, d.bits, u.bits),
                    _about(bp, D=d, U=u),
                )
                tally.check(
                    (d <= rest(bp, u)) == (diamond(bp, d) <= u),
                    key + (2, d.bits, u.bits),
                    _about(bp, D=d, U=u),
                )
            tally.check(
                ext(bp, box(bp, d)) <= d <= rest(bp, diamond(bp, d)),
                key + (3, d.bits, 0),
                _about(bp, D=d),
            )
        for u in ss:
            for v in ss:
                if u <= v:
                    tally.check(
                        ext(bp, u) <= ext(bp, v) and rest(bp, u) <= rest(bp, v),
                        key + (4, u.bits, v.bits),
                        _about(bp, U=u, V=v),
                    )


# --- Open / closed as communicables ----------------------------------------


@_register("THM_OPEN", "D open ⇔ D is (□,ext)-communicable")
def _sweep_open(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, _ in _subset_pairs(spec):
        cs = subset_systems(bp)[Strategy.BOX_EXT]
        for d in xs:
            raw = open_by_definition(bp, d)
            boxed = box(bp, d)
            via_diamond = all(overlaps(diamond_point(bp, x), boxed) for x in d)
            tally.check(
                raw == is_communicable_a(cs, d) == is_open(bp, d) == via_diamond,
                key + (0, d.bits, 0),
                _about(bp, D=d),
            )


@_register("THM_CLOSED", "D closed ⇔ D is (◇,rest)-communicable")
def _sweep_closed(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, _ in _subset_pairs(spec):
        cs = subset_systems(bp)[Strategy.DIAMOND_REST]
        for d in xs:
            raw = closed_by_definition(bp, d)
            tally.check(
                raw == is_communicable_a(cs, d) == is_closed(bp, d),
                key + (0, d.bits, 0),
                _about(bp, D=d),
            )


@_register("LEM_EXTREST", "ext U = ext□ext U is open; rest U = rest◇rest U is closed")
def _sweep_extrest(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, _, ss in _subset_pairs(spec):
        for u in ss:
            e, r = ext(bp, u), rest(bp, u)
            tally.check(
                e == ext(bp, box(bp, e)) and is_open(bp, e),
                key + (0, u.bits, 0),
                _about(bp, U=u),
            )
            tally.check(
                r == rest(bp, diamond(bp, r)) and is_closed(bp, r),
                key + (1, u.bits, 0),
                _about(bp, U=u),
            )


@_register("THM_DE", "(◇,ext) ⇒ open; (□,rest) ⇒ closed; both ⇒ clopen")
def _sweep_de(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, _ in _subset_pairs(spec):
        systems = subset_systems(bp)
        for d in xs:
            de = is_communicable_a(systems[Strategy.DIAMOND_EXT], d)
            br = is_communicable_a(systems[Strategy.BOX_REST], d)
            o, c = is_open(bp, d), is_closed(bp, d)
            tally.check(
                (not de or o) and (not br or c) and (not (de and br) or (o and c)),
                key + (0, d.bits, 0),
                _about(bp, D=d),
            )


def _converse_de_witnesses(spec: EnumSpec) -> tuple[Key, ...]:
    if spec.max_x < 2 or spec.max_s < 3:
        return ()
    key = pair_key(converse_de_witness())
    return key + (0, 0b01, 0), key + (0, 0b10, 0)


@_register(
    "NONTHM_CONVERSE_DE",
    "converse fails: open ⇏ (◇,ext)-communicable, closed ⇏ (□,rest)-communicable",
    kind=SuiteKind.NON_THEOREM,
    required_witnesses=_converse_de_witnesses,
)
def _sweep_converse_de(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, _ in _subset_pairs(spec):
        systems = subset_systems(bp)
        for d in xs:
            tally.check(
                not is_open(bp, d) or is_communicable_a(systems[Strategy.DIAMOND_EXT], d),
                key + (0, d.bits, 0),
                _about(bp, D=d),
            )
            tally.check(
                not is_closed(bp, d) or is_communicable_a(systems[Strategy.BOX_REST], d),
                key + (1, d.bits, 0),
                _about(bp, D=d),
            )


# --- B2 --------------------------------------------------------------------


@_register("LEM_B2", "B2 ⇒ rest U ⊆ ext U")
def _sweep_b2_lemma(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, _, ss in _subset_pairs(spec, only=satisfies_b2):
        for u in ss:
            tally.check(rest(bp, u) <= ext(bp, u), key + (0, u.bits, 0), _about(bp, U=u))


@_register("THM_B2_EQUIV", "B2 ⇒ ((◇,ext) ⇔ (□,rest) ⇔ clopen ∧ ◇D ⊆ □D)")
def _sweep_b2_equiv(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, _ in _subset_pairs(spec, only=satisfies_b2):
        systems = subset_systems(bp)
        for d in xs:
            first = is_communicable_a(systems[Strategy.DIAMOND_EXT], d)
            second = is_communicable_a(systems[Strategy.BOX_REST], d)
            third = is_open(bp, d) and is_closed(bp, d) and diamond(bp, d) <= box(bp, d)
            tally.check(first == second == third, key + (0, d.bits, 0), _about(bp, D=d))


# --- Arrow operators -------------------------------------------------------


@_register("PROP_ARROW", "→,← antitone; D ⊆ U← ⇔ U ⊆ D→; D ⊆ (D→)←")
def _sweep_prop_arrow(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, ss in _subset_pairs(spec):
        for d in xs:
            for e in xs:
                if d <= e:
                    tally.check(
                        arrow_right(bp, e) <= arrow_right(bp, d),
                        key + (0, d.bits, e.bits),
                        _about(bp, D=d, E=e),
                    )
            for u in ss:
                tally.check(
                    (d <= arrow_left(bp, u)) == (u <= arrow_right(bp, d)),
                    key + (1, d.bits, u.bits),
                    _about(bp, D=d, U=u),
                )
            tally.check(
                d <= arrow_left(bp, arrow_right(bp, d)),
                key + (2, d.bits, 0),
                _about(bp, D=d),
            )
        for u in ss:
            for v in ss:
                if u <= v:
                    tally.check(
                        arrow_left(bp, v) <= arrow_left(bp, u),
                        key + (3, u.bits, v.bits),
                        _about(bp, U=u, V=v),
                    )


def _implication_sweep(
    spec: EnumSpec,
    tally: _Tally,
    premises: tuple[Strategy, ...],
    conclusion: Callable[[BasicPair, Subset, dict], bool],
) -> None:
    for bp, key, xs, _ in _subset_pairs(spec):
        systems = subset_systems(bp)
        for d in xs:
            if any(is_communicable_a(systems[s], d) for s in premises):
                tally.check(conclusion(bp, d, systems), key + (0, d.bits, 0), _about(bp, D=d))


@_register("THM_ARROW_OPEN", "(→,ext)-communicable ⇒ open")
def _sweep_arrow_open(spec: EnumSpec, tally: _Tally) -> None:
    _implication_sweep(spec, tally, (Strategy.ARROW_EXT,), lambda bp, d, _: is_open(bp, d))


@_register("THM_ARROW_CLOSED", "(→,rest)-communicable ⇒ closed")
def _sweep_arrow_closed(spec: EnumSpec, tally: _Tally) -> None:
    _implication_sweep(spec, tally, (Strategy.ARROW_REST,), lambda bp, d, _: is_closed(bp, d))


@_register("THM_ARROW_FIXPOINT", "(□,←) or (◇,←) ⇒ (→,←)-communicable")
def _sweep_arrow_fixpoint(spec: EnumSpec, tally: _Tally) -> None:
    _implication_sweep(
        spec,
        tally,
        (Strategy.BOX_ARROWLEFT, Strategy.DIAMOND_ARROWLEFT),
        lambda bp, d, systems: is_communicable_a(systems[Strategy.ARROW_ARROWLEFT], d),
    )


@_register(
    "THM_ARROW_INTERSECTION",
    "(→,←)-communicable ⇔ D = ⋂{ext a | a ε U} for some U ⊆ S",
)
def _sweep_arrow_intersection(spec: EnumSpec, tally: _Tally) -> None:
    for bp, key, xs, ss in _subset_pairs(spec):
        cs = subset_systems(bp)[Strategy.ARROW_ARROWLEFT]
        meets = {intersection_of_exts(bp, u).bits for u in ss}
        for d in xs:
            fixed = is_communicable_a(cs, d)
            witnessed = not fixed or intersection_of_exts(bp, arrow_right(bp, d)) == d
            tally.check(
                fixed == (d.bits in meets) and witnessed,
                key + (0, d.bits, 0),
                _about(bp, D=d),
            )


# --- Relations -------------------------------------------------------------


def _relation_instances(
    spec: EnumSpec,
) -> Iterator[tuple[PairedSetting, Rel, Key, bool]]:
    """Исчерпывающая часть, затем seeded-выборка размера ``sample_dim``."""
    for ps, r in enumerate_relation_instances(spec):
        yield ps, r, (0, 0, *pair_key(ps.cx), *pair_key(ps.cy), r.index), False
    for i, (ps, r) in enumerate(sample_relation_instances(spec)):
        yield ps, r, (1, i, *pair_key(ps.cx), *pair_key(ps.cy), r.index), True


def _about_relation(ps: PairedSetting, r: Rel) -> Callable[[], str]:
    def render() -> str:
        return (
            f"cx={format_pair(ps.cx)} cy={format_pair(ps.cy)} "
            f"r={sorted(r.pairs())}"
        )

    return render


@_register(
    "PROP_SIGMA_RHO_WELLDEF",
    "r1 ~ r2 ⇒ σ(r1) = σ(r2); s1 ≈ s2 ⇒ ρ(s1) = ρ(s2)",
    sampled=True,
)
def _sweep_welldef(spec: EnumSpec, tally: _Tally) -> None:
    for ps in enumerate_settings(spec):
        base = (0, 0, *pair_key(ps.cx), *pair_key(ps.cy))
        sigmas: dict[tuple[Subset, ...], Rel] = {}
        for r in all_relations(ps.cx.concrete, ps.cy.concrete):
            s = sigma(ps, r)
            seen = sigmas.setdefault(basic_preimages(ps, r), s)
            tally.check(seen == s, base + (0, r.index), _about_relation(ps, r))
        rhos: dict[tuple[Subset, ...], Rel] = {}
        for s in all_relations(ps.cx.formal, ps.cy.formal):
            image = rho(ps, s)
            seen = rhos.setdefault(point_images(ps, s), image)
            tally.check(seen == image, base + (1, s.index), _about_relation(ps, s))

    # Выборка: соседнее по одному биту отношение, проверяем только если эквивалентно.
    for i, (ps, r) in enumerate(sample_relation_instances(spec)):
        base = (1, i, *pair_key(ps.cx), *pair_key(ps.cy))
        width = r.source.size * r.target.size
        if width:
            r2 = Rel.from_index(r.source, r.target, r.index ^ (1 << (i % width)))
            if basic_preimages(ps, r) == basic_preimages(ps, r2):
                tally.check(
                    sigma(ps, r) == sigma(ps, r2),
                    base + (0, r.index),
                    _about_relation(ps, r),
                    sampled=True,
                )
        s = sigma(ps, r)
        width = s.source.size * s.target.size
        if width:
            s2 = Rel.from_index(s.source, s.target, s.index ^ (1 << (i % width)))
            if point_images(ps, s) == point_images(ps, s2):
                tally.check(
                    rho(ps, s) == rho(ps, s2),
                    base + (1, s.index),
                    _about_relation(ps, s),
                    sampled=True,
                )


@_register("LEM_RHOSIGMA_SUB", "ρ(σ(r))⁻ ext b ⊆ r⁻ ext b", sampled=True)
def _sweep_rhosigma_sub(spec: EnumSpec, tally: _Tally) -> None:
    for ps, r, key, sampled in _relation_instances(spec):
        back = basic_preimages(ps, round_trip(ps, r))
        tally.check(
            all(p <= q for p, q in zip(back, basic_preimages(ps, r))),
            key,
            _about_relation(ps, r),
            sampled=sampled,
        )


@_register("LEM_CONT_SUB", "r continuous ⇒ r⁻ ext b ⊆ ρ(σ(r))⁻ ext b", sampled=True)
def _sweep_cont_sub(spec: EnumSpec, tally: _Tally) -> None:
    for ps, r, key, sampled in _relation_instances(spec):
        if not is_continuous(ps, r):
            continue
        back = basic_preimages(ps, round_trip(ps, r))
        tally.check(
            all(q <= p for p, q in zip(back, basic_preimages(ps, r))),
            key,
            _about_relation(ps, r),
            sampled=sampled,
        )


@_register("THM_CONTINUITY", "r continuous ⇔ r is (σ,ρ)-communicable", sampled=True)
def _sweep_continuity(spec: EnumSpec, tally: _Tally) -> None:
    for ps, r, key, sampled in _relation_instances(spec):
        c = is_continuous(ps, r)
        tally.check(
            c == is_rel_communicable(ps, r)
            and c == continuous_by_definition(ps, r)
            and c == continuous_by_diamond(ps, r),
            key,
            _about_relation(ps, r),
            sampled=sampled,
        )


@_register(
    "PROP_HAUSDORFF",
    "f function, cy Hausdorff ⇒ ρ(σ(f)) single-valued restriction of f",
    sampled=True,
)
def _sweep_hausdorff(spec: EnumSpec, tally: _Tally) -> None:
    for ps, f, key, sampled in _relation_instances(spec):
        if not (is_function(f) and is_hausdorff(ps.cy)):
            continue
        back = round_trip(ps, f)
        tally.check(
            is_single_valued(back) and restriction_of(back, f),
            key,
            _about_relation(ps, f),
            sampled=sampled,
        )


# --- Topology bridge -------------------------------------------------------


def _topologies(spec: EnumSpec):
    for n in range(1, spec.remark_max_ground + 1):
        yield from enumerate_topologies(n)


@_register("REMARK_TOPOLOGY", "fixed points of (Ω,∈,𝒯) match topological predicates")
def _sweep_remark(spec: EnumSpec, tally: _Tally) -> None:
    for index, t in enumerate(_topologies(spec)):
        for clause, d, holds in remark_clauses(t):
            tally.check(
                holds,
                (t.ground.size, index, clause, d.bits),
                lambda: f"{describe_topology(t)} clause {clause} fails for D={d}",
            )


@_register(
    "NONTHM_REMARK_BOX_ARROWLEFT",
    "literal clause D = (□D)← ⇔ D = Ω fails on every non-empty topology",
    kind=SuiteKind.NON_THEOREM,
)
def _sweep_remark_box_arrowleft(spec: EnumSpec, tally: _Tally) -> None:
    for index, t in enumerate(_topologies(spec)):
        bp = from_topology(t)
        full = t.ground.full_mask
        for d in powerset(t.ground):
            tally.check(
                (d == arrow_left(bp, box(bp, d))) == (d.bits == full),
                (t.ground.size, index, 4, d.bits),
                lambda: f"{describe_topology(t)} D={d}",
            )


# --- Runner ----------------------------------------------------------------


def check_theorem(theorem_id: str, spec: Optional[EnumSpec] = None) -> CheckReport:
    theorem = THEOREMS.get(theorem_id)
    if theorem is None:
        raise UnknownTheorem(f"Unknown theorem id: {theorem_id}")
    spec = spec or EnumSpec()

    logger.info("Checking %s (%s)", theorem_id, theorem.kind.value)
    started = time.perf_counter()
    tally = _Tally()
    theorem.sweep(spec, tally)
    elapsed = time.perf_counter() - started

    found = sorted(tally.counterexamples)
    missing = False
    if theorem.required_witnesses is not None:
        keys = {ce.key for ce in found}
        missing = not all(k in keys for k in theorem.required_witnesses(spec))

    report = CheckReport(
        theorem_id=theorem_id,
        kind=theorem.kind,
        description=theorem.description,
        instances=tally.instances,
        counterexamples=found,
        sampled=tally.sampled,
        seed=spec.seed if theorem.sampled else None,
        missing_witness=missing,
        elapsed_sec=elapsed,
    )
    if report.passed:
        logger.info(
            "%s passed: %d instances, %d counterexamples, %.2fs",
            theorem_id, report.instances, len(found), elapsed,
        )
    else:
        logger.warning(
            "%s FAILED: %d instances, %d counterexamples%s",
            theorem_id, report.instances, len(found),
            ", required witness missing" if missing else "",
        )
    return report


def run_suite(
    theorem_ids: Optional[Iterable[str]] = None,
    spec: Optional[EnumSpec] = None,
    *,
    workers: int = 1,
) -> list[CheckReport]:
    """Прогнать сьюты; отчёты идут в порядке ``theorem_ids`` (по умолчанию — реестра)."""
    ids = list(theorem_ids) if theorem_ids is not None else list(THEOREMS)
    for theorem_id in ids:
        if theorem_id not in THEOREMS:
            raise UnknownTheorem(f"Unknown theorem id: {theorem_id}")
    spec = spec or EnumSpec()
    if workers <= 1 or len(ids) <= 1:
        return [check_theorem(theorem_id, spec) for theorem_id in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check_theorem, ids, repeat(spec)))
