"""Загрузка и рендер Jinja-шаблонов отчётов из этого пакета.

    text = render("report", reports=..., max_witnesses=10)
"""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

TEMPLATES_DIR = Path(__file__).resolve().parent


@lru_cache(maxsize=1)
def _env() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(TEMPLATES_DIR)),
        undefined=StrictUndefined,  # любая пропущенная переменная = ошибка
        autoescape=select_autoescape(enabled_extensions=(), default=False),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render(template_name: str, /, **context: Any) -> str:
    """Рендерит ``{template_name}.txt.j2`` с переданным контекстом."""
    return _env().get_template(f"{template_name}.txt.j2").render(**context)
