"""Pydantic-модели структурированного (JSON-lines) отчёта."""
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel

from .base import CheckReport, Counterexample, SuiteKind


class CounterexampleRecord(BaseModel):
    key: List[int]
    detail: str

    @classmethod
    def from_counterexample(cls, ce: Counterexample) -> CounterexampleRecord:
        return cls(key=list(ce.key), detail=ce.detail)


class CheckReportRecord(BaseModel):
    theorem_id: str
    kind: SuiteKind
    description: str
    passed: bool
    instances: int
    sampled: int
    seed: Optional[int] = None
    missing_witness: bool = False
    counterexample_count: int
    counterexamples: List[CounterexampleRecord]
    elapsed_sec: float

    @classmethod
    def from_report(cls, report: CheckReport, max_witnesses: Optional[int] = None) -> CheckReportRecord:
        shown = report.counterexamples if max_witnesses is None else report.counterexamples[:max_witnesses]
        return cls(
            theorem_id=report.theorem_id,
            kind=report.kind,
            description=report.description,
            passed=report.passed,
            instances=report.instances,
            sampled=report.sampled,
            seed=report.seed,
            missing_witness=report.missing_witness,
            counterexample_count=len(report.counterexamples),
            counterexamples=[CounterexampleRecord.from_counterexample(ce) for ce in shown],
            elapsed_sec=round(report.elapsed_sec, 3),
        )
