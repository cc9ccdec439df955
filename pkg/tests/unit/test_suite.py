"""Unit-тесты реестра сьютов, прогона и рендера отчётов."""
from __future__ import annotations

import json

import pytest

from src.services.modelcheck import (
    THEOREMS,
    CheckReport,
    Counterexample,
    EnumSpec,
    SuiteKind,
    UnknownTheorem,
    check_theorem,
    converse_de_witness,
    paper_counterexample,
    render_structured,
    render_text,
    run_suite,
)
from src.services.modelcheck.enumeration import pair_key

# Маленькие границы: каждый сьют укладывается в доли секунды.
SMALL = EnumSpec(max_x=2, max_s=2, max_y=1, max_t=1, sample_size=10, sample_dim=2, seed=3, remark_max_ground=2)

EXPECTED_IDS = {
    "THM_PROP1",
    "THM_OPEN",
    "THM_CLOSED",
    "LEM_EXTREST",
    "THM_DE",
    "NONTHM_CONVERSE_DE",
    "LEM_B2",
    "THM_B2_EQUIV",
    "PROP_ARROW",
    "THM_ARROW_OPEN",
    "THM_ARROW_CLOSED",
    "THM_ARROW_FIXPOINT",
    "THM_ARROW_INTERSECTION",
    "PROP_SIGMA_RHO_WELLDEF",
    "LEM_RHOSIGMA_SUB",
    "LEM_CONT_SUB",
    "THM_CONTINUITY",
    "PROP_HAUSDORFF",
    "REMARK_TOPOLOGY",
    "NONTHM_REMARK_BOX_ARROWLEFT",
}


def test_registry_contents() -> None:
    """Двадцать сьютов, из них две не-теоремы."""
    assert set(THEOREMS) == EXPECTED_IDS
    non_theorems = {tid for tid, t in THEOREMS.items() if t.kind is SuiteKind.NON_THEOREM}
    assert non_theorems == {"NONTHM_CONVERSE_DE", "NONTHM_REMARK_BOX_ARROWLEFT"}


@pytest.mark.parametrize("theorem_id", sorted(EXPECTED_IDS))
def test_every_suite_passes_on_small_bounds(theorem_id: str) -> None:
    """Каждый сьют проходит и что-то проверяет."""
    report = check_theorem(theorem_id, SMALL)
    assert report.passed, report.counterexamples[:3]
    assert report.instances > 0


class TestOpen:
    def test_instance_count(self) -> None:
        """Число пар (basic pair, D) до (2, 2)."""
        # Σ по парам (|X|,|S|) ≤ (2,2) от 2^|X| подмножеств: 3·1 + 7·2 + 21·4
        report = check_theorem("THM_OPEN", EnumSpec(max_x=2, max_s=2))
        assert report.passed
        assert report.instances == 101
        assert report.seed is None


class TestConverseDE:
    def test_required_witnesses_present(self) -> None:
        """Оба синглетона пары-свидетеля попадают в контрпримеры."""
        report = check_theorem("NONTHM_CONVERSE_DE", EnumSpec(max_x=2, max_s=3))
        assert report.passed
        assert not report.missing_witness
        key = pair_key(converse_de_witness())
        assert key == (2, 3, 53)
        keys = {ce.key for ce in report.counterexamples}
        assert key + (0, 0b01, 0) in keys
        assert key + (0, 0b10, 0) in keys

    def test_witness_under_both_names(self, witness_pair) -> None:
        """Оба имени отдают одну и ту же пару (2, ⊩, 3)."""
        assert paper_counterexample() == converse_de_witness() == witness_pair

    def test_counterexamples_sorted(self) -> None:
        """Контрпримеры отсортированы по ключу."""
        report = check_theorem("NONTHM_CONVERSE_DE", EnumSpec(max_x=2, max_s=2))
        keys = [ce.key for ce in report.counterexamples]
        assert keys == sorted(keys)

    def test_no_witness_on_trivial_bounds(self) -> None:
        """На (1, 1) свидетеля нет, значит не-теорема не подтверждена."""
        report = check_theorem("NONTHM_CONVERSE_DE", EnumSpec(max_x=1, max_s=1))
        assert not report.counterexamples
        assert not report.passed


class TestRelationSuites:
    def test_sampled_instances_recorded(self) -> None:
        """В отчёте размер выборки и seed."""
        report = check_theorem("THM_CONTINUITY", SMALL)
        assert report.sampled == 10
        assert report.seed == 3

    def test_deterministic(self) -> None:
        """Повторный прогон даёт тот же отчёт."""
        first = check_theorem("LEM_RHOSIGMA_SUB", SMALL)
        second = check_theorem("LEM_RHOSIGMA_SUB", SMALL)
        assert first == second


class TestRunSuite:
    def test_unknown_theorem(self) -> None:
        """Неизвестный id отвергается до запуска."""
        with pytest.raises(UnknownTheorem):
            check_theorem("THM_NOPE")
        with pytest.raises(UnknownTheorem):
            run_suite(["THM_OPEN", "THM_NOPE"], SMALL)

    def test_order_follows_request(self) -> None:
        """Отчёты в порядке запроса, не реестра."""
        reports = run_suite(["THM_CLOSED", "THM_OPEN"], SMALL)
        assert [r.theorem_id for r in reports] == ["THM_CLOSED", "THM_OPEN"]

    def test_workers_give_same_reports(self) -> None:
        """Пул процессов не меняет результат."""
        ids = ["THM_OPEN", "THM_DE", "PROP_ARROW"]
        assert run_suite(ids, SMALL, workers=2) == run_suite(ids, SMALL, workers=1)


def _failing_report() -> CheckReport:
    return CheckReport(
        theorem_id="THM_OPEN",
        kind=SuiteKind.THEOREM,
        description="D open ⇔ D is (□,ext)-communicable",
        instances=4,
        counterexamples=[Counterexample((1, 1, 0, 0, 1, 0), "(1,⊩,1) ext=[{}] D={0}")],
    )


class TestRendering:
    def test_text(self) -> None:
        """Строки PASS/FAIL, свидетели и итог."""
        text = render_text([check_theorem("THM_OPEN", SMALL), _failing_report()])
        assert "PASS THM_OPEN [theorem]" in text
        assert "FAIL THM_OPEN [theorem] instances=4 counterexamples=1" in text
        assert "  - 1,1,0,0,1,0: (1,⊩,1) ext=[{}] D={0}" in text
        assert text.endswith("1/2 suites passed\n")

    def test_text_truncates_witnesses(self) -> None:
        """Лишние свидетели сворачиваются в «... N more»."""
        report = check_theorem("NONTHM_CONVERSE_DE", EnumSpec(max_x=2, max_s=2))
        extra = len(report.counterexamples) - 2
        assert extra > 0
        assert f"... {extra} more" in render_text([report], max_witnesses=2)

    def test_structured(self) -> None:
        """Одна JSON-запись на отчёт."""
        lines = render_structured([_failing_report()]).splitlines()
        assert len(lines) == 1
        record = json.loads(lines[0])
        assert record["theorem_id"] == "THM_OPEN"
        assert record["kind"] == "theorem"
        assert record["passed"] is False
        assert record["counterexample_count"] == 1
        assert record["counterexamples"][0]["key"] == [1, 1, 0, 0, 1, 0]


# Боевые границы: |X|,|S| ≤ 3, relation-сьюты до 2 плюс 10 000 экземпляров размера 3.
FULL = EnumSpec(
    max_x=3, max_s=3, max_y=2, max_t=2, sample_size=10_000, sample_dim=3, seed=20240917, remark_max_ground=3
)


@pytest.mark.slow
def test_full_bounds_run() -> None:
    """Все сьюты на боевых границах: ноль нарушений, выборка и свидетели на месте."""
    reports = run_suite(spec=FULL)
    assert [r.theorem_id for r in reports] == list(THEOREMS)
    failed = [(r.theorem_id, r.counterexamples[:3]) for r in reports if not r.passed]
    assert not failed
    by_id = {r.theorem_id: r for r in reports}
    assert by_id["THM_OPEN"].instances == sum(
        (1 << (nx * ns)) * (1 << nx) for nx in range(4) for ns in range(4)
    )
    assert by_id["THM_CONTINUITY"].sampled == 10_000
    assert by_id["LEM_RHOSIGMA_SUB"].sampled == 10_000
    assert 0 < by_id["LEM_CONT_SUB"].sampled <= 10_000
    key = pair_key(converse_de_witness())
    witnesses = {ce.key for ce in by_id["NONTHM_CONVERSE_DE"].counterexamples}
    assert {key + (0, 0b01, 0), key + (0, 0b10, 0)} <= witnesses
