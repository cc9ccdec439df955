"""Рендер отчётов: текст через Jinja-шаблон, JSON lines через pydantic."""
from __future__ import annotations

from typing import Optional, Sequence

from src.core.config import REPORT_MAX_WITNESSES

from .base import CheckReport
from .schemas import CheckReportRecord
from .templates.loader import render


def render_text(reports: Sequence[CheckReport], max_witnesses: int = REPORT_MAX_WITNESSES) -> str:
    return render("report", reports=list(reports), max_witnesses=max_witnesses)


def render_structured(
    reports: Sequence[CheckReport], max_witnesses: Optional[int] = REPORT_MAX_WITNESSES
) -> str:
    """Одна JSON-строка на сьют."""
    return "".join(
        CheckReportRecord.from_report(r, max_witnesses).model_dump_json() + "\n" for r in reports
    )
